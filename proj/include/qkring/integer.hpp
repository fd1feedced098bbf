#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qkring {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an identity that must hold exactly fails during construction,
/// e.g. a series coefficient that should be integral is not.
class AlgebraError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// C(n, r) with the convention C(n, r) = 0 for r outside [0, n].
inline Integer binomial(std::int64_t n, std::int64_t r) {
  if (n < 0) throw std::domain_error("binomial: n must be non-negative");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Integer acc = 1;
  for (std::int64_t i = 0; i < r; ++i) {
    acc *= n - i;
    acc /= i + 1;  // exact: acc is C(n, i + 1) here
  }
  return acc;
}

/// Exponent of the largest power of two dividing n.
inline unsigned two_adic_valuation(const Integer& n) {
  if (n == 0) throw std::domain_error("two_adic_valuation: valuation of 0 is infinite");
  Integer a = abs(n);
  return static_cast<unsigned>(boost::multiprecision::lsb(a));
}

inline Integer pow2(unsigned e) { return Integer(1) << e; }

/// Returns e if |n| = 2^e, otherwise -1.
inline int exact_log2(const Integer& n) {
  if (n <= 0) return -1;
  unsigned e = two_adic_valuation(n);
  return n == pow2(e) ? static_cast<int>(e) : -1;
}

inline std::string to_string(const Integer& n) { return n.str(); }

inline Integer parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_integer: empty string");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("parse_integer: no digits");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("parse_integer: bad digit in '" + s + "'");
  }
  return Integer(s);
}

/// Converts a rational that must be integral; throws AlgebraError otherwise.
inline Integer require_integer(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw AlgebraError(std::string(what) + ": non-integral value " + q.str());
  }
  return boost::multiprecision::numerator(q);
}

}  // namespace qkring
