#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace qkring {

/// Dense univariate polynomial with Integer coefficients; coeffs[j] multiplies x^j.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<int> coeffs) {
    for (int c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }
  static IntPoly monomial(std::size_t exponent, const Integer& c = 1) {
    std::vector<Integer> v(exponent + 1);
    v[exponent] = c;
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Integer(0); }
  Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    trim();
    return *this;
  }
  IntPoly& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) { return a *= Integer(-1); }
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(out));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  Integer operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(q(x)) by Horner's scheme.
  IntPoly compose(const IntPoly& inner) const {
    IntPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  /// Drops every term of degree above `bound`.
  IntPoly truncated(std::size_t bound) const {
    if (coeffs_.size() <= bound + 1) return *this;
    return IntPoly(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(bound) + 1));
  }

  /// Human-readable form in the variable `var`, highest degree first, e.g. "x^2 + 4x".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
      const Integer& c = coeffs_[idx];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (idx == 0 || mag != 1) os << mag;
      if (idx >= 1) os << var;
      if (idx >= 2) os << "^" << idx;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

/// Integer polynomial in phi (or w) with identically zero constant term.
class PhiPoly {
 public:
  PhiPoly() = default;

  /// Throws AlgebraError if `p` has a nonzero constant term.
  explicit PhiPoly(IntPoly p) : poly_(std::move(p)) {
    if (poly_.coeff(0) != 0) throw AlgebraError("PhiPoly: nonzero constant term " + poly_.coeff(0).str());
  }

  /// Builds sum_j coeffs[j-1] * phi^j.
  static PhiPoly from_coefficients(const std::vector<Integer>& from_degree_one) {
    std::vector<Integer> v;
    v.reserve(from_degree_one.size() + 1);
    v.emplace_back(0);
    v.insert(v.end(), from_degree_one.begin(), from_degree_one.end());
    return PhiPoly(IntPoly(std::move(v)));
  }

  static PhiPoly phi() { return PhiPoly(IntPoly::monomial(1)); }

  const IntPoly& poly() const { return poly_; }
  long degree() const { return poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }
  Integer coeff(std::size_t j) const { return poly_.coeff(j); }

  friend PhiPoly operator+(const PhiPoly& a, const PhiPoly& b) { return PhiPoly(a.poly_ + b.poly_); }
  friend PhiPoly operator-(const PhiPoly& a, const PhiPoly& b) { return PhiPoly(a.poly_ - b.poly_); }
  friend PhiPoly operator-(const PhiPoly& a) { return PhiPoly(-a.poly_); }
  friend PhiPoly operator*(const PhiPoly& a, const PhiPoly& b) { return PhiPoly(a.poly_ * b.poly_); }
  friend PhiPoly operator*(const Integer& s, const PhiPoly& a) { return PhiPoly(s * a.poly_); }
  friend bool operator==(const PhiPoly& a, const PhiPoly& b) { return a.poly_ == b.poly_; }

  /// this(inner(phi)); stays in the zero-constant subring.
  PhiPoly compose(const PhiPoly& inner) const { return PhiPoly(poly_.compose(inner.poly_)); }
  PhiPoly truncated(std::size_t bound) const { return PhiPoly(poly_.truncated(bound)); }

  std::string to_string(const std::string& var = "φ") const { return poly_.to_string(var); }

 private:
  IntPoly poly_;
};

inline std::ostream& operator<<(std::ostream& os, const PhiPoly& p) { return os << p.to_string(); }

/// t_i(c) with t_0 = 2, t_1 = c, t_{i+1} = c t_i - t_{i-1}; t_i(z + 1/z) = z^i + z^{-i}.
inline IntPoly chebyshev_t(std::size_t i) {
  IntPoly prev = IntPoly::constant(2);
  if (i == 0) return prev;
  IntPoly cur = IntPoly::monomial(1);
  const IntPoly c = IntPoly::monomial(1);
  for (std::size_t j = 1; j < i; ++j) {
    IntPoly next = c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace qkring
