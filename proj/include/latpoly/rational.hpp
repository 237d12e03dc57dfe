#pragma once

#include <boost/rational.hpp>
#include <charconv>
#include <string>
#include <string_view>

#include "latpoly/errors.hpp"

namespace latpoly {

// Exact arithmetic throughout: several axioms (IW1, CW1, Z5, ...) compare
// sums for equality, so any floating-point tolerance would make pass/fail
// ambiguous. boost::rational keeps values normalized (lowest terms, positive
// denominator).
using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace detail {
inline bool parse_ll(std::string_view s, long long& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}
}  // namespace detail

// Accepts a plain (possibly negative) integer or "p/q" with q > 0.
inline Rational parse_rational(std::string_view text) {
  long long num = 0;
  long long den = 1;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::parse_ll(text, num))
      fail(errc::bad_rational, "not a rational: '" + std::string(text) + "'");
  } else {
    if (!detail::parse_ll(text.substr(0, slash), num) ||
        !detail::parse_ll(text.substr(slash + 1), den))
      fail(errc::bad_rational, "not a rational: '" + std::string(text) + "'");
    if (den <= 0)
      fail(errc::bad_rational,
           "denominator must be positive: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace latpoly
