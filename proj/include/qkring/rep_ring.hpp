#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "integer.hpp"
#include "report.hpp"

namespace qkring {

/// Q_{2^n} with 2^n = 2m = 4k. The cyclic subgroup generated by x has order m = 2k.
class GroupParams {
 public:
  static constexpr int kMinN = 3;
  static constexpr int kMaxN = 16;

  static GroupParams from_n(int n) {
    if (n < kMinN || n > kMaxN) {
      throw std::out_of_range("GroupParams: n must lie in [3, 16], got " + std::to_string(n));
    }
    return GroupParams(n);
  }

  int n() const { return n_; }
  std::size_t k() const { return std::size_t{1} << (n_ - 2); }
  std::size_t m() const { return 2 * k(); }
  std::size_t group_order() const { return 4 * k(); }
  /// Number of irreducible representations (= number of conjugacy classes).
  std::size_t dim() const { return k() + 3; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  explicit GroupParams(int n) : n_(n) {}
  int n_;
};

/// Irreducible basis of R(Q_{4k}) in the fixed order 1, eta1, eta2, eta3, d_1, ..., d_{k-1}.
namespace basis {
inline constexpr std::size_t kOne = 0;
inline constexpr std::size_t kEta1 = 1;
inline constexpr std::size_t kEta2 = 2;
inline constexpr std::size_t kEta3 = 3;
inline constexpr std::size_t d(std::size_t i) { return 3 + i; }

inline std::string name(std::size_t idx) {
  switch (idx) {
    case kOne: return "1";
    case kEta1: return "η1";
    case kEta2: return "η2";
    case kEta3: return "η3";
    default: return "d" + std::to_string(idx - 3);
  }
}
}  // namespace basis

/// Virtual representation: integer combination of irreducibles.
class RepElement {
 public:
  explicit RepElement(GroupParams params) : params_(params), coeffs_(params.dim()) {}

  static RepElement basis_element(GroupParams params, std::size_t idx, const Integer& c = 1) {
    RepElement r(params);
    r.coeffs_.at(idx) = c;
    return r;
  }
  static RepElement one(GroupParams p) { return basis_element(p, basis::kOne); }
  static RepElement constant(GroupParams p, const Integer& c) { return basis_element(p, basis::kOne, c); }
  static RepElement eta1(GroupParams p) { return basis_element(p, basis::kEta1); }
  static RepElement eta2(GroupParams p) { return basis_element(p, basis::kEta2); }
  static RepElement eta3(GroupParams p) { return basis_element(p, basis::kEta3); }

  const GroupParams& params() const { return params_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t idx) const { return coeffs_.at(idx); }
  Integer& coeff(std::size_t idx) { return coeffs_.at(idx); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Virtual dimension (the augmentation).
  Integer dimension() const {
    Integer d = coeffs_[0] + coeffs_[1] + coeffs_[2] + coeffs_[3];
    for (std::size_t i = 4; i < coeffs_.size(); ++i) d += 2 * coeffs_[i];
    return d;
  }

  RepElement& operator+=(const RepElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  RepElement& operator-=(const RepElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  RepElement& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend RepElement operator+(RepElement a, const RepElement& b) { return a += b; }
  friend RepElement operator-(RepElement a, const RepElement& b) { return a -= b; }
  friend RepElement operator-(RepElement a) { return a *= Integer(-1); }
  friend RepElement operator*(const Integer& s, RepElement a) { return a *= s; }
  friend RepElement operator*(RepElement a, const Integer& s) { return a *= s; }
  friend RepElement operator*(const RepElement& a, const RepElement& b);

  friend bool operator==(const RepElement& a, const RepElement& b) {
    return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (i == basis::kOne) {
        os << mag;
      } else {
        if (mag != 1) os << mag;
        os << basis::name(i);
      }
    }
    return first ? "0" : os.str();
  }

  void check_same(const RepElement& o) const {
    if (!(o.params_ == params_)) throw std::invalid_argument("RepElement: mismatched group parameters");
  }

 private:
  GroupParams params_;
  std::vector<Integer> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const RepElement& r) { return os << r.to_string(); }

namespace detail {

/// Folds an arbitrary index into [0, k] using d_{-i} = d_i and d_i = d_{m-i}.
inline std::size_t fold_d_index(const GroupParams& p, std::int64_t i) {
  const auto m = static_cast<std::int64_t>(p.m());
  std::int64_t r = ((i % m) + m) % m;
  if (r > m / 2) r = m - r;
  return static_cast<std::size_t>(r);
}

/// Calls emit(idx, sign) for each irreducible in the expansion of d_i.
template <typename Emit>
void expand_d(const GroupParams& p, std::int64_t i, int sign, Emit&& emit) {
  std::size_t f = fold_d_index(p, i);
  if (f == 0) {
    emit(basis::kOne, sign);
    emit(basis::kEta1, sign);
  } else if (f == p.k()) {
    emit(basis::kEta2, sign);
    emit(basis::kEta3, sign);
  } else {
    emit(basis::d(f), sign);
  }
}

/// Product of two irreducibles, emitted term by term with unit coefficients.
template <typename Emit>
void basis_product(const GroupParams& p, std::size_t a, std::size_t b, Emit&& emit) {
  if (a > b) std::swap(a, b);
  const auto k = static_cast<std::int64_t>(p.k());
  if (b <= basis::kEta3) {
    // Klein four-group of one-dimensional characters: eta_a eta_b = eta_{a xor b}.
    emit(a ^ b, 1);
    return;
  }
  const auto j = static_cast<std::int64_t>(b - 3);
  if (a <= basis::kEta3) {
    if (a == basis::kOne || a == basis::kEta1) {
      expand_d(p, j, 1, emit);
    } else {
      expand_d(p, k - j, 1, emit);
    }
    return;
  }
  const auto i = static_cast<std::int64_t>(a - 3);
  expand_d(p, i + j, 1, emit);
  expand_d(p, i - j, 1, emit);
}

}  // namespace detail

/// d_i for any integer i, written in the irreducible basis.
inline RepElement canonical_d(const GroupParams& p, std::int64_t i) {
  RepElement r(p);
  detail::expand_d(p, i, 1, [&](std::size_t idx, int s) { r.coeff(idx) += s; });
  return r;
}

inline RepElement operator*(const RepElement& a, const RepElement& b) {
  a.check_same(b);
  const GroupParams& p = a.params_;
  RepElement out(p);
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const Integer c = a.coeffs_[i] * b.coeffs_[j];
      detail::basis_product(p, i, j, [&](std::size_t idx, int s) {
        if (s > 0) {
          out.coeffs_[idx] += c;
        } else {
          out.coeffs_[idx] -= c;
        }
      });
    }
  }
  return out;
}

inline RepElement multiply(const RepElement& a, const RepElement& b) { return a * b; }

inline RepElement power(const RepElement& a, std::size_t e) {
  RepElement acc = RepElement::one(a.params());
  for (std::size_t i = 0; i < e; ++i) acc = acc * a;
  return acc;
}

// ---------------------------------------------------------------------------
// Character-table oracle

/// Conjugacy classes in the frozen order [e], [x^k], [x^1], ..., [x^{k-1}], [y], [xy].
namespace classes {
inline constexpr std::size_t kIdentity = 0;
inline constexpr std::size_t kCentral = 1;
inline constexpr std::size_t x_power(std::size_t r) { return 1 + r; }
inline std::size_t y(const GroupParams& p) { return p.k() + 1; }
inline std::size_t xy(const GroupParams& p) { return p.k() + 2; }

inline std::size_t size(const GroupParams& p, std::size_t cls) {
  if (cls == kIdentity || cls == kCentral) return 1;
  if (cls < y(p)) return 2;
  return p.k();
}

inline std::string name(const GroupParams& p, std::size_t cls) {
  if (cls == kIdentity) return "[e]";
  if (cls == kCentral) return "[x^" + std::to_string(p.k()) + "]";
  if (cls == y(p)) return "[y]";
  if (cls == xy(p)) return "[xy]";
  return "[x^" + std::to_string(cls - 1) + "]";
}
}  // namespace classes

/// Not a Z-combination of irreducible characters.
class NotAVirtualCharacter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Function on conjugacy classes with values in Z[zeta], zeta = exp(2 pi i / 2k).
class ClassFunction {
 public:
  explicit ClassFunction(GroupParams p) : params_(p), values_(p.dim(), CyclotomicInt(p.k())) {}

  const GroupParams& params() const { return params_; }
  const std::vector<CyclotomicInt>& values() const { return values_; }
  const CyclotomicInt& at(std::size_t cls) const { return values_.at(cls); }
  CyclotomicInt& at(std::size_t cls) { return values_.at(cls); }

  ClassFunction& operator+=(const ClassFunction& o) {
    for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += o.values_[c];
    return *this;
  }
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(const Integer& s, ClassFunction a) {
    for (auto& v : a.values_) v *= s;
    return a;
  }
  /// Pointwise product (the character of the tensor product).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction out(a.params_);
    for (std::size_t c = 0; c < a.values_.size(); ++c) out.values_[c] = a.values_[c] * b.values_[c];
    return out;
  }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values_ == b.values_; }

  /// True if every value is fixed by zeta -> zeta^{-1}.
  bool is_real() const {
    for (const auto& v : values_) {
      if (!(v.conj() == v)) return false;
    }
    return true;
  }

 private:
  GroupParams params_;
  std::vector<CyclotomicInt> values_;
};

/// Irreducible characters indexed like the RepElement basis.
///
/// d_i takes zeta^{ir} + zeta^{-ir} on [x^r] and vanishes on [y], [xy]. The one-dimensional
/// characters are eta1 = (1 on powers of x, -1 on [y], [xy]) and eta2 = ((-1)^r on [x^r],
/// +1 on [y], -1 on [xy]), with eta3 = eta1 eta2. Which of eta2, eta3 is +1 on [y] is a
/// convention; exchanging them is a ring automorphism.
inline std::vector<ClassFunction> character_table(const GroupParams& p) {
  const std::size_t k = p.k();
  std::vector<ClassFunction> table(p.dim(), ClassFunction(p));
  auto integer = [k](std::int64_t v) { return CyclotomicInt(k, v); };

  for (std::size_t cls = 0; cls < p.dim(); ++cls) table[basis::kOne].at(cls) = integer(1);

  auto x_exponent = [&](std::size_t cls) -> std::int64_t {
    return cls == classes::kCentral ? static_cast<std::int64_t>(k) : static_cast<std::int64_t>(cls - 1);
  };

  for (std::size_t cls = 0; cls < p.dim(); ++cls) {
    const bool on_x = cls < classes::y(p);
    table[basis::kEta1].at(cls) = integer(on_x ? 1 : -1);
    if (on_x) {
      const std::int64_t r = cls == classes::kIdentity ? 0 : x_exponent(cls);
      table[basis::kEta2].at(cls) = integer(r % 2 == 0 ? 1 : -1);
    } else {
      table[basis::kEta2].at(cls) = integer(cls == classes::y(p) ? 1 : -1);
    }
    table[basis::kEta3].at(cls) = table[basis::kEta1].at(cls) * table[basis::kEta2].at(cls);
  }

  for (std::size_t i = 1; i < k; ++i) {
    auto& chi = table[basis::d(i)];
    const auto ii = static_cast<std::int64_t>(i);
    for (std::size_t cls = 0; cls < classes::y(p); ++cls) {
      const std::int64_t r = cls == classes::kIdentity ? 0 : x_exponent(cls);
      chi.at(cls) = CyclotomicInt::zeta_power(k, ii * r) + CyclotomicInt::zeta_power(k, -ii * r);
    }
    // [y] and [xy] stay zero
  }
  return table;
}

/// Character of a virtual representation.
inline ClassFunction character(const RepElement& r, const std::vector<ClassFunction>& table) {
  ClassFunction out(r.params());
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) {
    if (r.coeff(i) != 0) out += r.coeff(i) * table[i];
  }
  return out;
}

inline ClassFunction character(const RepElement& r) { return character(r, character_table(r.params())); }

inline ClassFunction conj(const ClassFunction& f) {
  ClassFunction out(f.params());
  for (std::size_t cls = 0; cls < f.values().size(); ++cls) out.at(cls) = f.at(cls).conj();
  return out;
}

/// <f, g> given conj(g) directly. Throws NotAVirtualCharacter when the value is not a
/// rational integer.
inline Integer inner_product_with_conj(const ClassFunction& f, const ClassFunction& g_conj) {
  const GroupParams& p = f.params();
  CyclotomicInt acc(p.k());
  for (std::size_t cls = 0; cls < p.dim(); ++cls) {
    acc.add_product(Integer(classes::size(p, cls)), f.at(cls), g_conj.at(cls));
  }
  const Integer order(p.group_order());
  if (!acc.is_rational_integer() || acc.constant_term() % order != 0) {
    throw NotAVirtualCharacter("inner product " + acc.to_string() + " / " + order.str() + " is not an integer");
  }
  return acc.constant_term() / order;
}

/// <f, g> = (1/4k) sum over classes |C| f(C) conj(g(C)).
inline Integer inner_product(const ClassFunction& f, const ClassFunction& g) {
  return inner_product_with_conj(f, conj(g));
}

/// Inverse of the character map via orthogonality. The irreducible characters are a basis
/// of the class functions, so integral inner products are exactly the virtual characters.
inline RepElement decompose(const ClassFunction& f, const std::vector<ClassFunction>& table_conj) {
  RepElement r(f.params());
  for (std::size_t i = 0; i < table_conj.size(); ++i) r.coeff(i) = inner_product_with_conj(f, table_conj[i]);
  return r;
}

inline std::vector<ClassFunction> conj(const std::vector<ClassFunction>& table) {
  std::vector<ClassFunction> out;
  out.reserve(table.size());
  for (const auto& chi : table) out.push_back(conj(chi));
  return out;
}

inline RepElement decompose(const ClassFunction& f) { return decompose(f, conj(character_table(f.params()))); }

/// Checks multiply(a, b) == decompose(char(a) char(b)) for every pair of irreducibles.
inline Report verify_structure_constants(const GroupParams& p) {
  Report rep;
  rep.title = "structure constants vs character table, n = " + std::to_string(p.n());
  const auto table = character_table(p);
  const auto table_conj = conj(table);
  for (std::size_t a = 0; a < p.dim(); ++a) {
    for (std::size_t b = 0; b < p.dim(); ++b) {
      const RepElement ea = RepElement::basis_element(p, a);
      const RepElement eb = RepElement::basis_element(p, b);
      const RepElement by_rules = ea * eb;
      bool ok = false;
      std::string detail;
      try {
        const RepElement by_chars = decompose(table[a] * table[b], table_conj);
        ok = by_rules == by_chars;
        if (!ok) detail = by_rules.to_string() + " vs " + by_chars.to_string();
      } catch (const NotAVirtualCharacter& e) {
        detail = e.what();
      }
      rep.add(basis::name(a) + "*" + basis::name(b), ok, detail);
    }
  }
  return rep;
}

/// Checks <chi_i, chi_j> = delta_ij and that the class sizes sum to the group order.
inline Report verify_orthogonality(const GroupParams& p) {
  Report rep;
  rep.title = "character orthogonality, n = " + std::to_string(p.n());
  std::size_t total = 0;
  for (std::size_t cls = 0; cls < p.dim(); ++cls) total += classes::size(p, cls);
  rep.add("class sizes sum to 4k", total == p.group_order(), std::to_string(total));
  const auto table = character_table(p);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      bool ok = false;
      try {
        ok = inner_product(table[i], table[j]) == (i == j ? 1 : 0);
      } catch (const NotAVirtualCharacter&) {
      }
      rep.add("<" + basis::name(i) + "," + basis::name(j) + ">", ok);
    }
  }
  return rep;
}

}  // namespace qkring
