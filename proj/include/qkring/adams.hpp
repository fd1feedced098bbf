#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "integer.hpp"
#include "polynomial.hpp"

namespace qkring {

/// psi^i(w) = sum_{j=1}^{i} C(i,j) C(i+j-1,j) / C(2j-1,j) w^j, the real Adams operation
/// on w = eta + eta^{-1} - 2. Every coefficient must come out integral.
inline PhiPoly psi_series(std::size_t i) {
  if (i < 1) throw std::domain_error("psi_series: i must be >= 1");
  const auto ii = static_cast<std::int64_t>(i);
  std::vector<Integer> coeffs;
  coeffs.reserve(i);
  for (std::int64_t j = 1; j <= ii; ++j) {
    Rational c(binomial(ii, j) * binomial(ii + j - 1, j), binomial(2 * j - 1, j));
    coeffs.push_back(require_integer(c, "psi_series"));
  }
  return PhiPoly::from_coefficients(coeffs);
}

/// Independent route: psi^i(w) = t_i(w + 2) - 2 with t_i the Chebyshev-type polynomial
/// t_i(z + 1/z) = z^i + z^{-i}.
inline PhiPoly psi_oracle(std::size_t i) {
  if (i < 1) throw std::domain_error("psi_oracle: i must be >= 1");
  IntPoly shifted = chebyshev_t(i).compose(IntPoly{2, 1}) - IntPoly::constant(2);
  if (shifted.coeff(0) != 0) throw AlgebraError("psi_oracle: nonzero constant term");
  return PhiPoly(shifted);
}

/// g_{2k}(phi) = 4k phi + sum_{j=2}^{k} (2k^2 + j - 1) / ((j-1)(2j-1)) C(k+j-2, 2j-3) phi^j + phi^{k+1}.
inline PhiPoly g_poly(std::size_t k) {
  if (k < 2) throw std::domain_error("g_poly: k must be >= 2");
  const auto kk = static_cast<std::int64_t>(k);
  std::vector<Integer> coeffs(k + 1);
  coeffs[0] = 4 * kk;
  for (std::int64_t j = 2; j <= kk; ++j) {
    Rational c(Integer(2 * kk * kk + j - 1) * binomial(kk + j - 2, 2 * j - 3), Integer((j - 1) * (2 * j - 1)));
    coeffs[static_cast<std::size_t>(j - 1)] = require_integer(c, "g_poly");
  }
  coeffs[k] = 1;
  return PhiPoly::from_coefficients(coeffs);
}

/// True iff g_{2k} = psi^{k+1} - psi^{k-1} exactly.
inline bool verify_g_identity(std::size_t k) { return g_poly(k) == psi_series(k + 1) - psi_series(k - 1); }

/// True iff psi^i(psi^j(w)) and psi^{ij}(w) agree in every degree up to `degree_bound`.
inline bool compose_check(std::size_t i, std::size_t j, std::size_t degree_bound) {
  const PhiPoly lhs = psi_series(i).compose(psi_series(j)).truncated(degree_bound);
  const PhiPoly rhs = psi_series(i * j).truncated(degree_bound);
  return lhs == rhs;
}

/// f(phi) with 4k phi = f(phi) phi^2 modulo g_{2k}(phi): f = -(g_{2k} - 4k phi) / phi^2.
inline IntPoly f_poly(std::size_t k) {
  const PhiPoly g = g_poly(k);
  std::vector<Integer> out;
  for (std::size_t j = 2; j <= k + 1; ++j) out.push_back(-g.coeff(j));
  return IntPoly(std::move(out));
}

}  // namespace qkring
