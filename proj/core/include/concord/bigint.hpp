#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace concord {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "3", "-4", "1/4", "-7/12" (denominator omitted when 1, always positive).
inline std::string rational_to_string(const Rat& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

// Accepts the formats produced by rational_to_string. Throws
// std::invalid_argument on anything else (including "1/0").
inline Rat parse_rational(const std::string& text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational number: " + text);
  };
  auto scan_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) fail();
    return Int(text.substr(start, pos - start));
  };
  std::size_t pos = 0;
  Int num = scan_int(pos);
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = scan_int(pos);
    if (den <= 0) fail();
  }
  if (pos != text.size()) fail();
  return Rat(num, den);
}

}  // namespace concord
