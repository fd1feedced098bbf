#pragma once

#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "integer.hpp"
#include "kring.hpp"
#include "matrix.hpp"
#include "rep_ring.hpp"
#include "smith.hpp"

namespace qkring {

/// R(Q_{4k}) / phi^exponent R(Q_{4k}) as an abelian group: Z^{k+3} modulo the lattice spanned
/// by phi^exponent * b for every irreducible b.
struct TruncatedQuotient {
  GroupParams params;
  std::size_t exponent;
  IntMatrix lattice;
  SmithForm smith;
};

inline TruncatedQuotient truncated_quotient(const GroupParams& p, std::size_t exponent) {
  const Embedding embed(p);
  const RepElement generator = embed.phi_power(exponent);
  IntMatrix lattice(p.dim(), p.dim());
  for (std::size_t b = 0; b < p.dim(); ++b) {
    lattice.set_row(b, (generator * RepElement::basis_element(p, b)).coeffs());
  }
  SmithForm smith = smith_normal_form(lattice);
  return {p, exponent, std::move(lattice), std::move(smith)};
}

/// Least t >= 1 with t * element in the lattice; nullopt when no such t exists.
inline std::optional<Integer> order_of(const RepElement& element, const TruncatedQuotient& q) {
  return order_in_quotient(element.coeffs(), q.smith);
}

inline Integer torsion_order(const TruncatedQuotient& q) { return torsion_order(q.smith); }

/// Truncation exponent under which phi has order 2^{n+2N}: N = 0 is R / phi^2 R, where the
/// order of phi is 4k.
inline std::size_t phi_truncation_exponent(std::size_t N) { return N + 2; }

/// Order of phi in R(Q_{4k}) / phi^{N+2} R(Q_{4k}).
inline std::optional<Integer> phi_order(const GroupParams& p, std::size_t N) {
  const TruncatedQuotient q = truncated_quotient(p, phi_truncation_exponent(N));
  return order_of(canonical_d(p, 1) - RepElement::constant(p, 2), q);
}

struct OrderCell {
  int n = 0;
  std::size_t N = 0;
  std::optional<Integer> order;
  unsigned expected_exponent = 0;  // n + 2N
  bool match = false;
};

inline OrderCell order_cell(int n, std::size_t N) {
  OrderCell cell;
  cell.n = n;
  cell.N = N;
  cell.order = phi_order(GroupParams::from_n(n), N);
  cell.expected_exponent = static_cast<unsigned>(n) + 2 * static_cast<unsigned>(N);
  cell.match = cell.order && *cell.order == pow2(cell.expected_exponent);
  return cell;
}

/// Order of phi for 3 <= n <= n_max, 0 <= N <= N_max, row-major in (n, N). Cells are
/// computed concurrently; the result order does not depend on scheduling.
inline std::vector<OrderCell> order_table(int n_max, std::size_t N_max) {
  std::vector<std::future<OrderCell>> pending;
  for (int n = GroupParams::kMinN; n <= n_max; ++n) {
    for (std::size_t N = 0; N <= N_max; ++N) pending.push_back(std::async(std::launch::async, order_cell, n, N));
  }
  std::vector<OrderCell> cells;
  cells.reserve(pending.size());
  for (auto& f : pending) cells.push_back(f.get());
  return cells;
}

/// "2^e" when the value is a power of two, decimal otherwise.
inline std::string power_of_two_string(const Integer& v) {
  const int e = exact_log2(v);
  return e >= 0 ? "2^" + std::to_string(e) : v.str();
}

}  // namespace qkring
