#include "rootgeom/rational.hpp"

#include <stdexcept>

namespace rootgeom {

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer quotient = n / d;
  if (n < 0 && quotient * d != n) --quotient;
  return quotient;
}

Integer round_half_up(const Rational& q) { return floor(q + Rational(1, 2)); }

Integer isqrt_floor(const Rational& q) {
  if (q < 0) throw std::domain_error("isqrt_floor of a negative rational");
  return boost::multiprecision::sqrt(floor(q));
}

bool exact_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer rn = boost::multiprecision::sqrt(n);
  Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw std::invalid_argument("empty integer");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw std::invalid_argument("malformed rational: " + std::string(s));
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace rootgeom
