#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "loopmod/error.hpp"

namespace loopmod {

/// Exact rational over arbitrary-precision integers. All measure and
/// cocycle arithmetic uses this type; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p" when the denominator is 1, otherwise "p/q".
inline std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" with decimal digits and an optional leading '-'.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw Error(Errc::bad_rational, "not a rational: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  auto read_int = [&]() -> boost::multiprecision::cpp_int {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0) fail();
    return boost::multiprecision::cpp_int(std::string(text.substr(start, pos - start)));
  };
  boost::multiprecision::cpp_int num = read_int();
  boost::multiprecision::cpp_int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int();
  }
  if (pos != text.size()) fail();
  if (den == 0) throw Error(Errc::bad_rational, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

} // namespace loopmod
