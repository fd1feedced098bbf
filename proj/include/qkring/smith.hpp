#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "matrix.hpp"

namespace qkring {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const {
    std::size_t r = 0;
    while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
    return r;
  }
  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

struct SmithWork {
  IntMatrix& D;
  IntMatrix& U;
  IntMatrix& V;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    D.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    D.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    U.negate_row(r);
  }
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& M) {
  SmithForm s{IntMatrix::identity(M.rows()), M, IntMatrix::identity(M.cols())};
  detail::SmithWork w{s.D, s.U, s.V};
  IntMatrix& D = s.D;
  const std::size_t rows = D.rows();
  const std::size_t cols = D.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->first, best->second)))) best = {i, j};
      }
    }
    if (!best) break;
    w.swap_rows(t, best->first);
    w.swap_cols(t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        w.add_row(i, t, -(D(i, t) / D(t, t)));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        w.add_col(j, t, -(D(t, j) / D(t, t)));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it and eliminate again.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D(i, j) % D(t, t) != 0) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      w.add_row(t, *offending, 1);
    }
    if (D(t, t) < 0) w.negate_row(t);
  }
  return s;
}

/// Order of the class of `v` (a row vector) in Z^cols / rowspace(M), or nullopt if infinite.
inline std::optional<Integer> order_in_quotient(const std::vector<Integer>& v, const SmithForm& s) {
  const IntMatrix& V = s.V;
  if (v.size() != V.rows()) throw std::invalid_argument("order_in_quotient: dimension mismatch");
  std::vector<Integer> y(V.cols());
  for (std::size_t j = 0; j < V.cols(); ++j) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) y[j] += v[i] * V(i, j);
    }
  }
  const std::size_t rank = s.rank();
  Integer order = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    if (i >= rank) return std::nullopt;
    const Integer& d = s.D(i, i);
    Integer g = gcd(d, y[i]);
    Integer local = d / g;
    order = order / gcd(order, local) * local;
  }
  return order;
}

/// Product of the nonzero elementary divisors.
inline Integer torsion_order(const SmithForm& s) {
  Integer acc = 1;
  for (std::size_t i = 0; i < s.rank(); ++i) acc *= s.D(i, i);
  return acc;
}

}  // namespace qkring
