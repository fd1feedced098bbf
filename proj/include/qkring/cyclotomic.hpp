#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer.hpp"

namespace qkring {

/// Element sum_j c_j zeta^j of Z[zeta], zeta a primitive 2k-th root of unity with k a
/// power of two. The basis 1, zeta, ..., zeta^{k-1} is reduced by zeta^k = -1.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(std::size_t k, const Integer& value = 0) : coeffs_(k) {
    if (k == 0) throw std::invalid_argument("CyclotomicInt: k must be positive");
    coeffs_[0] = value;
  }

  explicit CyclotomicInt(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("CyclotomicInt: k must be positive");
  }

  /// zeta^e for any integer e.
  static CyclotomicInt zeta_power(std::size_t k, std::int64_t e) {
    CyclotomicInt z(k);
    const std::int64_t m = 2 * static_cast<std::int64_t>(k);
    std::int64_t r = ((e % m) + m) % m;
    if (r < static_cast<std::int64_t>(k)) {
      z.coeffs_[static_cast<std::size_t>(r)] = 1;
    } else {
      z.coeffs_[static_cast<std::size_t>(r) - k] = -1;
    }
    return z;
  }

  std::size_t k() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_rational_integer() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
      if (coeffs_[j] != 0) return false;
    }
    return true;
  }
  const Integer& constant_term() const { return coeffs_[0]; }

  /// Image under zeta -> zeta^{-1} (complex conjugation).
  CyclotomicInt conj() const {
    CyclotomicInt out(k());
    out.coeffs_[0] = coeffs_[0];
    // zeta^{-j} = -zeta^{k-j} for 0 < j < k
    for (std::size_t j = 1; j < k(); ++j) out.coeffs_[k() - j] = -coeffs_[j];
    return out;
  }

  CyclotomicInt& operator+=(const CyclotomicInt& o) {
    check_same(o);
    for (std::size_t j = 0; j < k(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  CyclotomicInt& operator-=(const CyclotomicInt& o) {
    check_same(o);
    for (std::size_t j = 0; j < k(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  CyclotomicInt& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const Integer& s) { return a *= s; }
  friend CyclotomicInt operator*(const Integer& s, CyclotomicInt a) { return a *= s; }

  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) { return cyclo_mul(a, b); }

  /// this += s * a * b, touching only nonzero coefficients.
  CyclotomicInt& add_product(const Integer& s, const CyclotomicInt& a, const CyclotomicInt& b) {
    check_same(a);
    check_same(b);
    const std::size_t n = k();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      const Integer sa = s * a.coeffs_[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (b.coeffs_[j] == 0) continue;
        if (i + j < n) {
          coeffs_[i + j] += sa * b.coeffs_[j];
        } else {
          coeffs_[i + j - n] -= sa * b.coeffs_[j];
        }
      }
    }
    return *this;
  }

  /// Product reduced by zeta^k = -1. Throws std::invalid_argument on mismatched k.
  friend CyclotomicInt cyclo_mul(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.check_same(b);
    const std::size_t k = a.k();
    CyclotomicInt out(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (b.coeffs_[j] == 0) continue;
        Integer t = a.coeffs_[i] * b.coeffs_[j];
        std::size_t e = i + j;
        if (e < k) {
          out.coeffs_[e] += t;
        } else {
          out.coeffs_[e - k] -= t;
        }
      }
    }
    return out;
  }

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t j = 0; j < k(); ++j) {
      if (coeffs_[j] == 0) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[j].str();
      if (j > 0) s += "ζ^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_same(const CyclotomicInt& o) const {
    if (o.k() != k()) throw std::invalid_argument("CyclotomicInt: mismatched k");
  }

  std::vector<Integer> coeffs_;
};

}  // namespace qkring
