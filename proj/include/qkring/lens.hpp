#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "adams.hpp"
#include "integer.hpp"
#include "kring.hpp"
#include "polynomial.hpp"
#include "rep_ring.hpp"
#include "report.hpp"

namespace qkring {

/// Element of Z[eta] / (eta^{2k} - 1): coefficients of eta^0, ..., eta^{2k-1}.
class LensElement {
 public:
  explicit LensElement(std::size_t k) : k_(k), coeffs_(2 * k) {
    if (k == 0) throw std::invalid_argument("LensElement: k must be positive");
  }
  LensElement(std::size_t k, std::vector<Integer> coeffs) : k_(k), coeffs_(std::move(coeffs)) {
    if (k == 0 || coeffs_.size() != 2 * k) throw std::invalid_argument("LensElement: expected 2k coefficients");
  }

  static LensElement constant(std::size_t k, const Integer& c) {
    LensElement e(k);
    e.coeffs_[0] = c;
    return e;
  }
  /// eta^e for any integer e.
  static LensElement eta_power(std::size_t k, std::int64_t e) {
    LensElement out(k);
    const auto m = static_cast<std::int64_t>(2 * k);
    out.coeffs_[static_cast<std::size_t>(((e % m) + m) % m)] = 1;
    return out;
  }
  /// w = eta + eta^{-1} - 2.
  static LensElement w(std::size_t k) { return eta_power(k, 1) + eta_power(k, -1) - constant(k, 2); }

  std::size_t k() const { return k_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  LensElement& operator+=(const LensElement& o) {
    check_same(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  LensElement& operator-=(const LensElement& o) {
    check_same(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  friend LensElement operator+(LensElement a, const LensElement& b) { return a += b; }
  friend LensElement operator-(LensElement a, const LensElement& b) { return a -= b; }
  friend LensElement operator*(const Integer& s, LensElement a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend LensElement operator*(const LensElement& a, const LensElement& b) { return lens_multiply(a, b); }
  friend bool operator==(const LensElement& a, const LensElement& b) {
    return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
  }

  /// Cyclic convolution mod eta^{2k} = 1. Throws std::invalid_argument on mismatched k.
  friend LensElement lens_multiply(const LensElement& a, const LensElement& b) {
    a.check_same(b);
    const std::size_t m = a.coeffs_.size();
    LensElement out(a.k_);
    for (std::size_t i = 0; i < m; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b.coeffs_[j] == 0) continue;
        out.coeffs_[(i + j) % m] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[j].str();
      if (j > 0) s += "η^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_same(const LensElement& o) const {
    if (o.k_ != k_) throw std::invalid_argument("LensElement: mismatched k");
  }

  std::size_t k_;
  std::vector<Integer> coeffs_;
};

/// Restriction along Z_{2k} = <x> -> Q_{4k}: 1, eta1 -> 1; eta2, eta3 -> eta^k; d_i -> eta^i + eta^{-i}.
inline LensElement restrict(const RepElement& r) {
  const GroupParams& p = r.params();
  const std::size_t k = p.k();
  const auto kk = static_cast<std::int64_t>(k);
  LensElement out(k);
  out += (r.coeff(basis::kOne) + r.coeff(basis::kEta1)) * LensElement::constant(k, 1);
  out += (r.coeff(basis::kEta2) + r.coeff(basis::kEta3)) * LensElement::eta_power(k, kk);
  for (std::size_t i = 1; i < k; ++i) {
    if (r.coeff(basis::d(i)) == 0) continue;
    const auto ii = static_cast<std::int64_t>(i);
    out += r.coeff(basis::d(i)) * (LensElement::eta_power(k, ii) + LensElement::eta_power(k, -ii));
  }
  return out;
}

/// p(x) evaluated in the lens ring by Horner's scheme.
inline LensElement evaluate(const IntPoly& poly, const LensElement& x) {
  LensElement acc(x.k());
  for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
    acc = acc * x + LensElement::constant(x.k(), *it);
  }
  return acc;
}

/// Image of a polynomial in v1, v2, phi under v1 -> 0, v2 -> eta^k - 1, phi -> w. Built
/// directly from the generator images, independently of the R(Q) embedding.
inline LensElement restrict_formal(const FormalPoly& f, std::size_t k) {
  const LensElement v2 = LensElement::eta_power(k, static_cast<std::int64_t>(k)) - LensElement::constant(k, 1);
  const LensElement w = LensElement::w(k);
  LensElement out(k);
  for (const auto& [m, c] : f.terms()) {
    if (m.v1 > 0) continue;
    LensElement term = LensElement::constant(k, c);
    for (unsigned i = 0; i < m.v2; ++i) term = term * v2;
    for (unsigned i = 0; i < m.phi; ++i) term = term * w;
    out += term;
  }
  return out;
}

namespace detail {
inline RepElement random_rep_element(const GroupParams& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  RepElement r(p);
  for (std::size_t i = 0; i < p.dim(); ++i) r.coeff(i) = dist(rng);
  return r;
}
}  // namespace detail

/// restrict(a b) == restrict(a) restrict(b) on all irreducible pairs and `trials` random
/// virtual elements; also checks the unit maps to 1.
inline bool verify_restriction_hom(const GroupParams& p, std::size_t trials, std::uint64_t seed = 0x5eed) {
  if (!(restrict(RepElement::one(p)) == LensElement::constant(p.k(), 1))) return false;
  for (std::size_t a = 0; a < p.dim(); ++a) {
    for (std::size_t b = 0; b < p.dim(); ++b) {
      const RepElement ea = RepElement::basis_element(p, a);
      const RepElement eb = RepElement::basis_element(p, b);
      if (!(restrict(ea * eb) == restrict(ea) * restrict(eb))) return false;
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const RepElement a = detail::random_rep_element(p, rng);
    const RepElement b = detail::random_rep_element(p, rng);
    if (!(restrict(a * b) == restrict(a) * restrict(b))) return false;
  }
  return true;
}

/// Every relation dies in the lens ring, and psi^i(w) = eta^i + eta^{-i} - 2 for 1 <= i <= 2k.
inline Report verify_relations_vanish(const GroupParams& p) {
  Report rep;
  rep.title = "relations in Z[η]/(η^" + std::to_string(p.m()) + " - 1)";
  const std::size_t k = p.k();
  const RelationSet rels(p);
  for (Relation id : kAllRelations) {
    const LensElement image = restrict_formal(rels.difference(id), k);
    rep.add(relation_name(id), image.is_zero(), image.to_string());
  }
  const LensElement w = LensElement::w(k);
  {
    const LensElement image = evaluate(g_poly(k).poly(), w);
    rep.add("g_" + std::to_string(2 * k) + "(w) = 0", image.is_zero(), image.to_string());
  }
  {
    const RepElement phi = canonical_d(p, 1) - RepElement::constant(p, 2);
    rep.add("φ maps to w", restrict(phi) == w);
  }
  for (std::size_t i = 1; i <= 2 * k; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    const LensElement expected =
        LensElement::eta_power(k, ii) + LensElement::eta_power(k, -ii) - LensElement::constant(k, 2);
    rep.add("ψ^" + std::to_string(i) + "(w)", evaluate(psi_series(i).poly(), w) == expected);
  }
  return rep;
}

}  // namespace qkring
