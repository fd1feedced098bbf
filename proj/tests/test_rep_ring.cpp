#include <array>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "qkring/rep_ring.hpp"

using namespace qkring;

namespace {

RepElement random_element(const GroupParams& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-6, 6);
  RepElement r(p);
  for (std::size_t i = 0; i < p.dim(); ++i) r.coeff(i) = dist(rng);
  return r;
}

RepElement d(const GroupParams& p, std::int64_t i) { return canonical_d(p, i); }

// Q_{4k} realized as pairs (a, b) <-> x^a y^b, 0 <= a < 2k, b in {0, 1}, with
// y x = x^{-1} y and y^2 = x^k. Used to rebuild conjugacy classes and characters by brute force.
struct QuaternionElement {
  std::int64_t a;
  int b;
  friend bool operator==(const QuaternionElement&, const QuaternionElement&) = default;
  friend bool operator<(const QuaternionElement& l, const QuaternionElement& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
};

struct BruteGroup {
  std::int64_t k;
  std::int64_t m;

  QuaternionElement norm(std::int64_t a, int b) const { return {((a % m) + m) % m, b}; }

  QuaternionElement mul(QuaternionElement g, QuaternionElement h) const {
    if (g.b == 0) return norm(g.a + h.a, h.b);
    // x^a y x^c y^d = x^{a-c} y^{1+d}
    if (h.b == 0) return norm(g.a - h.a, 1);
    return norm(g.a - h.a + k, 0);
  }

  std::vector<QuaternionElement> elements() const {
    std::vector<QuaternionElement> out;
    for (int b = 0; b < 2; ++b) {
      for (std::int64_t a = 0; a < m; ++a) out.push_back({a, b});
    }
    return out;
  }

  QuaternionElement inverse(QuaternionElement g) const {
    for (const auto& h : elements()) {
      if (mul(g, h) == QuaternionElement{0, 0}) return h;
    }
    throw std::logic_error("no inverse");
  }

  // 2x2 matrix of d_i: x -> diag(z^i, z^{-i}), y -> [[0, (-1)^i], [1, 0]].
  using Mat = std::array<CyclotomicInt, 4>;
  Mat rep_d(std::int64_t i, QuaternionElement g) const {
    const auto kk = static_cast<std::size_t>(k);
    const CyclotomicInt zero(kk);
    Mat x_pow{CyclotomicInt::zeta_power(kk, i * g.a), zero, zero, CyclotomicInt::zeta_power(kk, -i * g.a)};
    if (g.b == 0) return x_pow;
    const CyclotomicInt sgn(kk, i % 2 == 0 ? 1 : -1);
    Mat y{zero, sgn, CyclotomicInt(kk, 1), zero};
    return {x_pow[0] * y[0] + x_pow[1] * y[2], x_pow[0] * y[1] + x_pow[1] * y[3],
            x_pow[2] * y[0] + x_pow[3] * y[2], x_pow[2] * y[1] + x_pow[3] * y[3]};
  }
};

}  // namespace

TEST(GroupParams, Conventions) {
  const auto p = GroupParams::from_n(5);
  EXPECT_EQ(p.k(), 8u);
  EXPECT_EQ(p.m(), 16u);
  EXPECT_EQ(p.group_order(), 32u);
  EXPECT_EQ(p.dim(), 11u);
  EXPECT_THROW(GroupParams::from_n(2), std::out_of_range);
}

TEST(CanonicalD, Endpoints) {
  const auto p = GroupParams::from_n(4);  // k = 4, m = 8
  EXPECT_EQ(d(p, 0), RepElement::one(p) + RepElement::eta1(p));
  EXPECT_EQ(d(p, 4), RepElement::eta2(p) + RepElement::eta3(p));
  EXPECT_EQ(d(p, 11), RepElement::basis_element(p, basis::d(3)));
}

TEST(CanonicalD, FoldingIsConsistent) {
  for (int n = 3; n <= 6; ++n) {
    const auto p = GroupParams::from_n(n);
    const auto m = static_cast<std::int64_t>(p.m());
    for (std::int64_t i = -3 * m; i <= 3 * m; ++i) {
      ASSERT_EQ(d(p, i), d(p, m - i));
      ASSERT_EQ(d(p, i), d(p, -i));
    }
  }
}

TEST(Multiply, DocumentedProducts) {
  const auto p4 = GroupParams::from_n(4);
  EXPECT_EQ(d(p4, 1) * d(p4, 1), d(p4, 2) + RepElement::one(p4) + RepElement::eta1(p4));
  EXPECT_EQ(RepElement::eta3(p4) * d(p4, 2), d(p4, 2));

  const auto p3 = GroupParams::from_n(3);
  EXPECT_EQ(d(p3, 1) * d(p3, 1),
            RepElement::one(p3) + RepElement::eta1(p3) + RepElement::eta2(p3) + RepElement::eta3(p3));
}

TEST(Multiply, OneDimensionalActionsOnDSpan) {
  for (int n = 3; n <= 6; ++n) {
    const auto p = GroupParams::from_n(n);
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(p.k()); ++i) {
      ASSERT_EQ(RepElement::eta1(p) * d(p, i), d(p, i));
      ASSERT_EQ(RepElement::eta2(p) * d(p, i), d(p, static_cast<std::int64_t>(p.k()) - i));
      ASSERT_EQ(RepElement::eta3(p) * d(p, i), RepElement::eta2(p) * d(p, i));
    }
    ASSERT_EQ(RepElement::eta1(p) * RepElement::eta2(p), RepElement::eta3(p));
    ASSERT_EQ(RepElement::eta3(p) * RepElement::eta3(p), RepElement::one(p));
  }
}

TEST(Multiply, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 6; ++n) {
    const auto p = GroupParams::from_n(n);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_element(p, rng);
      const auto b = random_element(p, rng);
      const auto c = random_element(p, rng);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(RepElement::one(p) * a, a);
      ASSERT_EQ((a * b).dimension(), a.dimension() * b.dimension());
    }
  }
}

TEST(Multiply, MismatchedGroupsRejected) {
  EXPECT_THROW(RepElement::one(GroupParams::from_n(3)) * RepElement::one(GroupParams::from_n(4)),
               std::invalid_argument);
}

TEST(CharacterTable, SpotValues) {
  const auto p = GroupParams::from_n(4);
  const auto table = character_table(p);
  const std::size_t k = p.k();
  EXPECT_EQ(table[basis::kEta1].at(classes::x_power(1)), CyclotomicInt(k, 1));
  EXPECT_EQ(table[basis::d(1)].at(classes::kCentral), CyclotomicInt(k, -2));
  const std::vector<int> dims{1, 1, 1, 1, 2, 2, 2};
  for (std::size_t i = 0; i < table.size(); ++i) {
    EXPECT_EQ(table[i].at(classes::kIdentity), CyclotomicInt(k, dims[i])) << i;
    EXPECT_TRUE(table[i].is_real());
  }
}

TEST(CharacterTable, MatchesBruteForceGroup) {
  for (int n = 3; n <= 5; ++n) {
    const auto p = GroupParams::from_n(n);
    const BruteGroup grp{static_cast<std::int64_t>(p.k()), static_cast<std::int64_t>(p.m())};
    const auto elems = grp.elements();
    ASSERT_EQ(elems.size(), p.group_order());

    // Conjugacy classes by brute force.
    std::set<std::set<QuaternionElement>> found;
    for (const auto& g : elems) {
      std::set<QuaternionElement> cls;
      for (const auto& h : elems) cls.insert(grp.mul(grp.mul(h, g), grp.inverse(h)));
      found.insert(cls);
    }
    ASSERT_EQ(found.size(), p.dim());

    auto class_of = [&](const QuaternionElement& g) -> std::size_t {
      if (g.b == 0) {
        if (g.a == 0) return classes::kIdentity;
        if (g.a == grp.k) return classes::kCentral;
        return classes::x_power(static_cast<std::size_t>(std::min(g.a, grp.m - g.a)));
      }
      return g.a % 2 == 0 ? classes::y(p) : classes::xy(p);
    };
    for (const auto& cls : found) {
      const std::size_t idx = class_of(*cls.begin());
      for (const auto& g : cls) ASSERT_EQ(class_of(g), idx);
      ASSERT_EQ(cls.size(), classes::size(p, idx));
    }

    // Characters: one-dimensional ones are homomorphisms; d_i is the trace of its matrices.
    const auto table = character_table(p);
    for (std::size_t e = basis::kEta1; e <= basis::kEta3; ++e) {
      for (const auto& g : elems) {
        for (const auto& h : elems) {
          ASSERT_EQ(table[e].at(class_of(grp.mul(g, h))), table[e].at(class_of(g)) * table[e].at(class_of(h)));
        }
      }
    }
    for (std::int64_t i = 1; i < grp.k; ++i) {
      for (const auto& g : elems) {
        const auto mg = grp.rep_d(i, g);
        ASSERT_EQ(mg[0] + mg[3], table[basis::d(static_cast<std::size_t>(i))].at(class_of(g))) << i;
        for (const auto& h : elems) {
          const auto mh = grp.rep_d(i, h);
          const auto mgh = grp.rep_d(i, grp.mul(g, h));
          ASSERT_EQ(mgh[0], mg[0] * mh[0] + mg[1] * mh[2]);
          ASSERT_EQ(mgh[1], mg[0] * mh[1] + mg[1] * mh[3]);
          ASSERT_EQ(mgh[2], mg[2] * mh[0] + mg[3] * mh[2]);
          ASSERT_EQ(mgh[3], mg[2] * mh[1] + mg[3] * mh[3]);
        }
      }
    }
  }
}

TEST(Decompose, Examples) {
  const auto p3 = GroupParams::from_n(3);
  const auto table = character_table(p3);
  EXPECT_EQ(decompose(table[basis::d(1)] * table[basis::d(1)]),
            RepElement::one(p3) + RepElement::eta1(p3) + RepElement::eta2(p3) + RepElement::eta3(p3));
  EXPECT_TRUE(decompose(ClassFunction(p3)).is_zero());
  EXPECT_EQ(decompose(table[basis::kEta2]), RepElement::eta2(p3));
}

TEST(Decompose, RejectsNonCharacters) {
  const auto p = GroupParams::from_n(3);
  ClassFunction f(p);
  f.at(classes::kIdentity) = CyclotomicInt(p.k(), 1);  // regular character / 8
  EXPECT_THROW(decompose(f), NotAVirtualCharacter);
}

TEST(Decompose, RoundTripOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 6; ++n) {
    const auto p = GroupParams::from_n(n);
    for (int t = 0; t < 10; ++t) {
      const auto r = random_element(p, rng);
      ASSERT_EQ(decompose(character(r)), r);
    }
  }
}

TEST(StructureConstants, AllPairsAgreeWithCharacters) {
  for (int n = 3; n <= 6; ++n) {
    const auto p = GroupParams::from_n(n);
    const Report rep = verify_structure_constants(p);
    EXPECT_EQ(rep.checks.size(), p.dim() * p.dim());
    EXPECT_TRUE(rep.all_passed()) << "n = " << n;
  }
  EXPECT_EQ(verify_structure_constants(GroupParams::from_n(3)).checks.size(), 25u);
  EXPECT_EQ(verify_structure_constants(GroupParams::from_n(4)).checks.size(), 49u);
}

TEST(Orthogonality, IrreduciblesAreOrthonormal) {
  for (int n = 3; n <= 6; ++n) EXPECT_TRUE(verify_orthogonality(GroupParams::from_n(n)).all_passed()) << n;
}

TEST(RepElement, ToString) {
  const auto p = GroupParams::from_n(3);
  EXPECT_EQ((RepElement::eta1(p) - RepElement::one(p)).to_string(), "-1 + η1");
  EXPECT_EQ(RepElement(p).to_string(), "0");
}
