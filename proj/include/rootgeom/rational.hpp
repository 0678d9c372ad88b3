#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rootgeom {

// Expression templates off: values are safe to hold in `auto`.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Largest integer not exceeding q.
Integer floor(const Rational& q);

// Nearest integer, ties rounded up.
Integer round_half_up(const Rational& q);

// Largest b >= 0 with b*b <= q; q must be non-negative.
Integer isqrt_floor(const Rational& q);

// Exact square root of a perfect rational square, or false.
bool exact_sqrt(const Rational& q, Rational& root);

// Canonical fraction string: "3/2", "-1", "0".
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace rootgeom
