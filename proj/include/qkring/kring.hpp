#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "adams.hpp"
#include "integer.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rep_ring.hpp"
#include "report.hpp"

namespace qkring {

/// Monomial v1^a v2^b phi^c.
struct Monomial {
  unsigned v1 = 0;
  unsigned v2 = 0;
  unsigned phi = 0;

  unsigned v_count() const { return v1 + v2; }
  bool divides(const Monomial& o) const { return v1 <= o.v1 && v2 <= o.v2 && phi <= o.phi; }
  Monomial operator*(const Monomial& o) const { return {v1 + o.v1, v2 + o.v2, phi + o.phi}; }
  /// Requires divides(o).
  Monomial quotient_of(const Monomial& o) const { return {o.v1 - v1, o.v2 - v2, o.phi - phi}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    std::string s;
    auto put = [&s](const char* var, unsigned e) {
      if (e == 0) return;
      if (!s.empty()) s += "·";
      s += var;
      if (e > 1) s += "^" + std::to_string(e);
    };
    put("v1", v1);
    put("v2", v2);
    put("φ", phi);
    return s.empty() ? "1" : s;
  }
};

/// Term order used by the rewriter: v-factor count, then phi-degree, then v1-exponent.
/// Every rule in a RelationSet strictly decreases it, which guarantees termination.
struct RewriteOrder {
  static auto key(const Monomial& m) { return std::make_tuple(m.v_count(), m.phi, m.v1); }
  bool operator()(const Monomial& a, const Monomial& b) const { return key(a) > key(b); }
};

/// Polynomial in v1, v2, phi with Integer coefficients, largest monomial first.
class FormalPoly {
 public:
  using Terms = std::map<Monomial, Integer, RewriteOrder>;

  FormalPoly() = default;
  static FormalPoly term(const Monomial& m, const Integer& c = 1) {
    FormalPoly p;
    p.add(m, c);
    return p;
  }
  static FormalPoly constant(const Integer& c) { return term({}, c); }
  static FormalPoly v1() { return term({1, 0, 0}); }
  static FormalPoly v2() { return term({0, 1, 0}); }
  static FormalPoly phi(unsigned e = 1) { return term({0, 0, e}); }
  static FormalPoly from_phi_poly(const PhiPoly& p) {
    FormalPoly out;
    for (std::size_t j = 1; j < p.poly().coeffs().size(); ++j) out.add({0, 0, static_cast<unsigned>(j)}, p.coeff(j));
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  FormalPoly& operator+=(const FormalPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  FormalPoly& operator-=(const FormalPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
  friend FormalPoly operator-(FormalPoly a, const FormalPoly& b) { return a -= b; }
  friend FormalPoly operator-(const FormalPoly& a) { return FormalPoly() - a; }
  friend FormalPoly operator*(const Integer& s, const FormalPoly& a) {
    FormalPoly out;
    for (const auto& [m, c] : a.terms_) out.add(m, s * c);
    return out;
  }
  friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
    FormalPoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add(ma * mb, ca * cb);
    }
    return out;
  }
  friend bool operator==(const FormalPoly& a, const FormalPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool unit = m == Monomial{};
      if (unit || mag != 1) os << mag;
      if (!unit) os << m.to_string();
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// Relations of the presentation. R3 (g_{2k}(phi) = 0) is not part of the minimal set;
/// it is carried as the derived reduction rule for phi^{k+1}.
enum class Relation { R1, R2, R3, R4, R5, R6 };

inline constexpr std::array<Relation, 6> kAllRelations = {Relation::R1, Relation::R2, Relation::R3,
                                                          Relation::R4, Relation::R5, Relation::R6};
/// Relations 1, 2, 4, 5, 6.
inline constexpr std::array<Relation, 5> kMinimalRelations = {Relation::R1, Relation::R2, Relation::R4,
                                                              Relation::R5, Relation::R6};

inline std::string relation_name(Relation r) {
  switch (r) {
    case Relation::R1: return "Relation 1";
    case Relation::R2: return "Relation 2";
    case Relation::R3: return "Relation 3";
    case Relation::R4: return "Relation 4";
    case Relation::R5: return "Relation 5";
    case Relation::R6: return "Relation 6";
  }
  return "?";
}

/// Oriented relation lhs -> rhs.
struct Rule {
  Relation id;
  Monomial lhs;
  FormalPoly rhs;
};

/// Rewrite rules of the presented ring for a fixed n.
class RelationSet {
 public:
  explicit RelationSet(GroupParams p) : params_(p) {
    const std::size_t k = p.k();
    const FormalPoly v1 = FormalPoly::v1();
    const FormalPoly v2 = FormalPoly::v2();
    const FormalPoly phi = FormalPoly::phi();
    const Integer two = 2;

    rules_.push_back({Relation::R1, {2, 0, 0}, -(two * v1)});
    rules_.push_back({Relation::R2, {0, 2, 0}, -(two * v2)});
    rules_.push_back({Relation::R4, {1, 0, 1}, -(two * v1)});
    rules_.push_back({Relation::R5, {0, 1, 1}, FormalPoly::from_phi_poly(psi_series(k - 1)) - phi - two * v2});
    if (p.n() == 3) {
      rules_.push_back(
          {Relation::R6, {1, 1, 0}, Integer(4) * phi + FormalPoly::phi(2) - two * v1 - two * v2});
    } else {
      rules_.push_back({Relation::R6, {1, 1, 0}, FormalPoly::from_phi_poly(psi_series(k)) - two * v2});
    }
    const auto top = static_cast<unsigned>(k + 1);
    rules_.push_back({Relation::R3, {0, 0, top}, FormalPoly::phi(top) - FormalPoly::from_phi_poly(g_poly(k))});
  }

  const GroupParams& params() const { return params_; }
  const std::vector<Rule>& rules() const { return rules_; }

  const Rule& rule(Relation id) const {
    for (const auto& r : rules_) {
      if (r.id == id) return r;
    }
    throw std::logic_error("RelationSet: missing rule");
  }

  /// lhs - rhs, which vanishes in the ring.
  FormalPoly difference(Relation id) const {
    const Rule& r = rule(id);
    return FormalPoly::term(r.lhs) - r.rhs;
  }

 private:
  GroupParams params_;
  std::vector<Rule> rules_;
};

inline RelationSet relations_for(int n) { return RelationSet(GroupParams::from_n(n)); }

/// Rule application order used by reduce() unless told otherwise.
inline constexpr std::array<Relation, 6> kDefaultStrategy = {Relation::R1, Relation::R2, Relation::R6,
                                                             Relation::R4, Relation::R5, Relation::R3};

/// Replaces the lhs factor of `m` by the rule's rhs.
inline FormalPoly rewrite_once(const Monomial& m, const Integer& c, const Rule& rule) {
  const FormalPoly rest = FormalPoly::term(rule.lhs.quotient_of(m), c);
  return rule.rhs * rest;
}

/// Rewrites `expr` with the allowed rules (tried in the given order) until no allowed
/// rule applies. Monomials that no allowed rule can touch are left in place.
template <typename Strategy = decltype(kDefaultStrategy)>
FormalPoly reduce_formal(const FormalPoly& expr, const RelationSet& rels, const Strategy& allowed = kDefaultStrategy) {
  std::vector<const Rule*> rules;
  for (Relation id : allowed) rules.push_back(&rels.rule(id));

  FormalPoly work = expr;
  FormalPoly done;
  while (!work.is_zero()) {
    const auto top = *work.terms().begin();
    work.add(top.first, -top.second);
    const Rule* hit = nullptr;
    for (const Rule* r : rules) {
      if (r->lhs.divides(top.first)) {
        hit = r;
        break;
      }
    }
    if (hit == nullptr) {
      done.add(top.first, top.second);
    } else {
      work += rewrite_once(top.first, top.second, *hit);
    }
  }
  return done;
}

/// Element of the presented ring in normal form: c0 + a1 v1 + a2 v2 + sum_{j=1}^{k} phi_j phi^j.
class KElement {
 public:
  explicit KElement(GroupParams p) : params_(p), phi_(p.k()) {}

  static KElement one(GroupParams p) {
    KElement e(p);
    e.c0_ = 1;
    return e;
  }
  static KElement v1(GroupParams p) {
    KElement e(p);
    e.a1_ = 1;
    return e;
  }
  static KElement v2(GroupParams p) {
    KElement e(p);
    e.a2_ = 1;
    return e;
  }
  /// phi^j for 1 <= j <= k.
  static KElement phi_power(GroupParams p, std::size_t j) {
    if (j < 1 || j > p.k()) throw std::out_of_range("KElement::phi_power: exponent outside [1, k]");
    KElement e(p);
    e.phi_[j - 1] = 1;
    return e;
  }

  /// Normal-form basis 1, v1, v2, phi, ..., phi^k.
  static std::vector<KElement> basis(GroupParams p) {
    std::vector<KElement> out{one(p), v1(p), v2(p)};
    for (std::size_t j = 1; j <= p.k(); ++j) out.push_back(phi_power(p, j));
    return out;
  }

  static std::string basis_name(std::size_t idx) {
    switch (idx) {
      case 0: return "1";
      case 1: return "v1";
      case 2: return "v2";
      case 3: return "φ";
      default: return "φ^" + std::to_string(idx - 2);
    }
  }

  /// Throws std::invalid_argument if `f` contains a monomial outside the basis.
  static KElement from_formal(GroupParams p, const FormalPoly& f) {
    KElement e(p);
    for (const auto& [m, c] : f.terms()) {
      if (m == Monomial{}) {
        e.c0_ = c;
      } else if (m == Monomial{1, 0, 0}) {
        e.a1_ = c;
      } else if (m == Monomial{0, 1, 0}) {
        e.a2_ = c;
      } else if (m.v_count() == 0 && m.phi <= p.k()) {
        e.phi_[m.phi - 1] = c;
      } else {
        throw std::invalid_argument("KElement: monomial " + m.to_string() + " is not in normal form");
      }
    }
    return e;
  }

  FormalPoly to_formal() const {
    FormalPoly f;
    f.add({}, c0_);
    f.add({1, 0, 0}, a1_);
    f.add({0, 1, 0}, a2_);
    for (std::size_t j = 0; j < phi_.size(); ++j) f.add({0, 0, static_cast<unsigned>(j + 1)}, phi_[j]);
    return f;
  }

  /// Coordinates on the normal-form basis.
  std::vector<Integer> coordinates() const {
    std::vector<Integer> v{c0_, a1_, a2_};
    v.insert(v.end(), phi_.begin(), phi_.end());
    return v;
  }
  static KElement from_coordinates(GroupParams p, const std::vector<Integer>& v) {
    if (v.size() != p.dim()) throw std::invalid_argument("KElement: expected k + 3 coordinates");
    KElement e(p);
    e.c0_ = v[0];
    e.a1_ = v[1];
    e.a2_ = v[2];
    std::copy(v.begin() + 3, v.end(), e.phi_.begin());
    return e;
  }

  const GroupParams& params() const { return params_; }
  const Integer& c0() const { return c0_; }
  const Integer& a1() const { return a1_; }
  const Integer& a2() const { return a2_; }
  const std::vector<Integer>& phi() const { return phi_; }

  bool is_zero() const { return to_formal().is_zero(); }

  KElement& operator+=(const KElement& o) {
    c0_ += o.c0_;
    a1_ += o.a1_;
    a2_ += o.a2_;
    for (std::size_t j = 0; j < phi_.size(); ++j) phi_[j] += o.phi_[j];
    return *this;
  }
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator*(const Integer& s, KElement a) {
    a.c0_ *= s;
    a.a1_ *= s;
    a.a2_ *= s;
    for (auto& c : a.phi_) c *= s;
    return a;
  }
  friend KElement operator-(const KElement& a, const KElement& b) { return a + Integer(-1) * b; }
  friend bool operator==(const KElement& a, const KElement& b) {
    return a.params_ == b.params_ && a.c0_ == b.c0_ && a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.phi_ == b.phi_;
  }

  std::string to_string() const { return to_formal().to_string(); }

 private:
  GroupParams params_;
  Integer c0_;
  Integer a1_;
  Integer a2_;
  std::vector<Integer> phi_;
};

/// Normal form of an arbitrary polynomial in v1, v2, phi.
inline KElement reduce(const FormalPoly& expr, const RelationSet& rels) {
  return KElement::from_formal(rels.params(), reduce_formal(expr, rels));
}

inline KElement multiply_nf(const KElement& a, const KElement& b, const RelationSet& rels) {
  return reduce(a.to_formal() * b.to_formal(), rels);
}

// ---------------------------------------------------------------------------
// Embedding into R(Q_{4k}): v1 = eta1 - 1, v2 = eta2 - 1, phi = d_1 - 2.

class Embedding {
 public:
  explicit Embedding(GroupParams p)
      : params_(p),
        v1_(RepElement::eta1(p) - RepElement::one(p)),
        v2_(RepElement::eta2(p) - RepElement::one(p)),
        phi_(canonical_d(p, 1) - RepElement::constant(p, 2)) {}

  const RepElement& v1() const { return v1_; }
  const RepElement& v2() const { return v2_; }
  const RepElement& phi() const { return phi_; }

  RepElement phi_power(std::size_t e) const {
    while (phi_powers_.size() <= e) {
      phi_powers_.push_back(phi_powers_.empty() ? RepElement::one(params_) : phi_powers_.back() * phi_);
    }
    return phi_powers_[e];
  }

  RepElement monomial(const Monomial& m) const {
    RepElement r = phi_power(m.phi);
    for (unsigned i = 0; i < m.v1; ++i) r = r * v1_;
    for (unsigned i = 0; i < m.v2; ++i) r = r * v2_;
    return r;
  }

  RepElement operator()(const FormalPoly& f) const {
    RepElement out(params_);
    for (const auto& [m, c] : f.terms()) out += c * monomial(m);
    return out;
  }
  RepElement operator()(const KElement& e) const { return (*this)(e.to_formal()); }
  RepElement operator()(const PhiPoly& p) const { return (*this)(FormalPoly::from_phi_poly(p)); }

 private:
  GroupParams params_;
  RepElement v1_;
  RepElement v2_;
  RepElement phi_;
  mutable std::vector<RepElement> phi_powers_;
};

inline RepElement embed_to_R(const KElement& a) { return Embedding(a.params())(a); }

/// Rows are the embeddings of 1, v1, v2, phi, ..., phi^k in the irreducible basis.
struct BasisChange {
  IntMatrix matrix;
  Integer det;
  bool unimodular() const { return det == 1 || det == -1; }
};

inline BasisChange basis_change_matrix(const GroupParams& p) {
  const Embedding embed(p);
  const auto nf_basis = KElement::basis(p);
  IntMatrix m(p.dim(), p.dim());
  for (std::size_t r = 0; r < nf_basis.size(); ++r) m.set_row(r, embed(nf_basis[r]).coeffs());
  Integer det = determinant(m);
  return {std::move(m), std::move(det)};
}

/// Every relation, and the derived identities used to build them, embedded in R(Q_{4k}).
inline Report verify_relations_in_R(const GroupParams& p) {
  Report rep;
  rep.title = "relations in R(Q_" + std::to_string(p.group_order()) + ")";
  const RelationSet rels(p);
  const Embedding embed(p);
  for (Relation id : kAllRelations) {
    const RepElement image = embed(rels.difference(id));
    rep.add(relation_name(id), image.is_zero(), image.is_zero() ? "" : image.to_string());
  }
  const RepElement two = RepElement::constant(p, 2);
  for (std::size_t i = 1; i + 1 <= p.k(); i += 2) {
    const RepElement diff = canonical_d(p, static_cast<std::int64_t>(i)) - two - embed(psi_series(i));
    rep.add("d" + std::to_string(i) + " - 2 = ψ^" + std::to_string(i) + "(φ)", diff.is_zero(), diff.to_string());
  }
  if (p.n() >= 4) {
    const auto kk = static_cast<std::int64_t>(p.k());
    const RepElement diff = canonical_d(p, kk) - canonical_d(p, 0) - embed(psi_series(p.k()));
    rep.add("d" + std::to_string(p.k()) + " - d0 = ψ^" + std::to_string(p.k()) + "(φ)", diff.is_zero(),
            diff.to_string());
  }
  return rep;
}

/// Outcome of multiplying Relation 6 by (phi + 2) and rewriting with Relations 1, 2, 4, 5 only.
struct RedundancyProof {
  FormalPoly product;
  FormalPoly reduced;
  FormalPoly g;
  int sign = 0;  // +1 or -1 when reduced == sign * g, 0 otherwise
  bool holds() const { return sign != 0; }
};

inline RedundancyProof relation3_redundancy(const GroupParams& p) {
  const RelationSet rels(p);
  RedundancyProof proof;
  proof.product = (FormalPoly::phi() + FormalPoly::constant(2)) * rels.difference(Relation::R6);
  constexpr std::array<Relation, 4> kWithoutR3R6 = {Relation::R1, Relation::R2, Relation::R4, Relation::R5};
  proof.reduced = reduce_formal(proof.product, rels, kWithoutR3R6);
  proof.g = FormalPoly::from_phi_poly(g_poly(p.k()));
  if (proof.reduced == proof.g) {
    proof.sign = 1;
  } else if (proof.reduced == -proof.g) {
    proof.sign = -1;
  }
  return proof;
}

inline bool verify_relation3_redundant(int n) { return relation3_redundancy(GroupParams::from_n(n)).holds(); }

/// A relation of the minimal set together with a basis product that stays stuck without it.
struct MinimalityEntry {
  Relation dropped;
  bool witnessed = false;
  std::optional<std::pair<std::size_t, std::size_t>> stuck_pair;  // indices into KElement::basis
  FormalPoly stuck_value;
};

struct MinimalityWitness {
  bool full_set_closes = false;
  std::vector<MinimalityEntry> entries;
  bool holds() const {
    return full_set_closes &&
           std::all_of(entries.begin(), entries.end(), [](const MinimalityEntry& e) { return e.witnessed; });
  }
};

namespace detail {
inline bool is_normal(const FormalPoly& f, std::size_t k) {
  for (const auto& [m, c] : f.terms()) {
    if (m.v_count() > 1 || (m.v_count() == 1 && m.phi > 0) || m.phi > k) return false;
  }
  return true;
}
}  // namespace detail

/// Drops each of Relations 1, 2, 4, 5, 6 in turn (keeping the derived phi^{k+1} rule) and looks
/// for a product of two basis elements that no longer reduces into the basis.
inline MinimalityWitness verify_minimality_witness(const GroupParams& p) {
  const RelationSet rels(p);
  const auto nf_basis = KElement::basis(p);
  std::vector<FormalPoly> formal;
  for (const auto& b : nf_basis) formal.push_back(b.to_formal());

  auto first_stuck = [&](const std::vector<Relation>& allowed) -> std::optional<MinimalityEntry> {
    for (std::size_t i = 0; i < formal.size(); ++i) {
      for (std::size_t j = i; j < formal.size(); ++j) {
        FormalPoly r = reduce_formal(formal[i] * formal[j], rels, allowed);
        if (!detail::is_normal(r, p.k())) {
          MinimalityEntry e{Relation::R1, true, std::make_pair(i, j), std::move(r)};
          return e;
        }
      }
    }
    return std::nullopt;
  };

  MinimalityWitness w;
  w.full_set_closes = !first_stuck(std::vector<Relation>(kDefaultStrategy.begin(), kDefaultStrategy.end()));
  for (Relation dropped : kMinimalRelations) {
    std::vector<Relation> allowed;
    for (Relation r : kDefaultStrategy) {
      if (r != dropped) allowed.push_back(r);
    }
    MinimalityEntry entry{dropped, false, std::nullopt, {}};
    if (auto stuck = first_stuck(allowed)) {
      entry.witnessed = true;
      entry.stuck_pair = stuck->stuck_pair;
      entry.stuck_value = std::move(stuck->stuck_value);
    }
    w.entries.push_back(std::move(entry));
  }
  return w;
}

/// Overlaps of rule left-hand sides.
inline std::vector<Monomial> critical_monomials(const GroupParams& p) {
  const auto top = static_cast<unsigned>(p.k() + 1);
  return {{2, 1, 0}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 1, 1}, {1, 0, top}, {0, 1, top}};
}

/// Local confluence: at each critical monomial, every applicable first rewrite leads to the
/// same normal form.
inline Report verify_local_confluence(const GroupParams& p) {
  Report rep;
  rep.title = "local confluence, n = " + std::to_string(p.n());
  const RelationSet rels(p);
  for (const Monomial& m : critical_monomials(p)) {
    std::vector<KElement> results;
    std::string detail;
    for (const Rule& r : rels.rules()) {
      if (!r.lhs.divides(m)) continue;
      results.push_back(reduce(rewrite_once(m, 1, r), rels));
      detail += relation_name(r.id) + " -> " + results.back().to_string() + "; ";
    }
    const bool ok = results.size() >= 2 &&
                    std::all_of(results.begin(), results.end(), [&](const KElement& e) { return e == results[0]; });
    rep.add(m.to_string(), ok, detail);
  }
  return rep;
}

/// embed(a * b) == embed(a) * embed(b) over all normal-form basis pairs.
inline Report verify_commuting_square(const GroupParams& p) {
  Report rep;
  rep.title = "multiply_nf vs R(Q) multiplication, n = " + std::to_string(p.n());
  const RelationSet rels(p);
  const Embedding embed(p);
  const auto nf_basis = KElement::basis(p);
  for (std::size_t i = 0; i < nf_basis.size(); ++i) {
    for (std::size_t j = 0; j < nf_basis.size(); ++j) {
      const RepElement lhs = embed(multiply_nf(nf_basis[i], nf_basis[j], rels));
      const RepElement rhs = embed(nf_basis[i]) * embed(nf_basis[j]);
      rep.add(KElement::basis_name(i) + "*" + KElement::basis_name(j), lhs == rhs);
    }
  }
  return rep;
}

/// 4k phi = f(phi) phi^2 in the presented ring, with f = -(g_{2k} - 4k phi) / phi^2.
inline bool verify_f_relation(const GroupParams& p) {
  const RelationSet rels(p);
  const IntPoly f = f_poly(p.k());
  FormalPoly f_formal;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) f_formal.add({0, 0, static_cast<unsigned>(j)}, f.coeff(j));
  const FormalPoly lhs = Integer(4 * p.k()) * FormalPoly::phi();
  return reduce(lhs - f_formal * FormalPoly::phi(2), rels).is_zero();
}

}  // namespace qkring
