#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "integer.hpp"
#include "rep_ring.hpp"
#include "truncated.hpp"

namespace qkring {

/// Finitely generated abelian group as a list of cyclic orders; 0 stands for Z.
struct CohGroup {
  std::vector<Integer> factors;

  bool is_trivial() const { return factors.empty(); }
  /// Group order, or nullopt if there is a free factor.
  std::optional<Integer> order() const {
    Integer acc = 1;
    for (const auto& f : factors) {
      if (f == 0) return std::nullopt;
      acc *= f;
    }
    return acc;
  }
  std::string to_string() const {
    if (factors.empty()) return "0";
    std::string s;
    for (const auto& f : factors) {
      if (!s.empty()) s += " ⊕ ";
      s += f == 0 ? std::string("Z") : "Z" + f.str();
    }
    return s;
  }
  friend bool operator==(const CohGroup&, const CohGroup&) = default;
};

/// H^p(BQ_{4k}; Z).
inline CohGroup h_group(std::size_t p, std::size_t k) {
  if (p == 0) return {{0}};
  if (p % 2 == 1) return {};
  if (p % 4 == 2) return {{2, 2}};
  return {{Integer(4 * k)}};
}

/// prod |H^{2j}| over 2 <= 2j <= 4N + 2, i.e. 4^{N+1} (4k)^N.
inline Integer predicted_reduced_order(std::size_t N, std::size_t k) {
  Integer acc = 1;
  for (std::size_t p = 2; p <= 4 * N + 2; p += 2) acc *= *h_group(p, k).order();
  return acc;
}

/// Computed orders against the cohomology bookkeeping. Informational: no entry here is a
/// claim of the source material except the phi-order line.
struct ConsistencyReport {
  int n = 0;
  std::size_t N = 0;
  std::size_t k = 0;
  Integer torsion;    // torsion of R / phi^{N+1} R
  Integer predicted;  // predicted_reduced_order(N, k)
  bool torsion_match = false;
  std::optional<Integer> phi_order;  // in R / phi^{N+2} R
  Integer phi_expected;              // 2^{n+2N}
  bool phi_match = false;
  std::optional<Integer> phi_ratio;  // phi_order(N) / phi_order(N-1), N >= 1
};

inline ConsistencyReport consistency_report(const GroupParams& p, std::size_t N) {
  ConsistencyReport r;
  r.n = p.n();
  r.N = N;
  r.k = p.k();
  r.torsion = torsion_order(truncated_quotient(p, N + 1));
  r.predicted = predicted_reduced_order(N, p.k());
  r.torsion_match = r.torsion == r.predicted;
  r.phi_order = phi_order(p, N);
  r.phi_expected = pow2(static_cast<unsigned>(p.n()) + 2 * static_cast<unsigned>(N));
  r.phi_match = r.phi_order && *r.phi_order == r.phi_expected;
  if (N >= 1 && r.phi_order) {
    if (auto prev = phi_order(p, N - 1); prev && *r.phi_order % *prev == 0) r.phi_ratio = *r.phi_order / *prev;
  }
  return r;
}

}  // namespace qkring
