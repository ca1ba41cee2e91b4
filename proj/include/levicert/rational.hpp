#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

#include "errors.hpp"

namespace levicert {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational &q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Inverse of `to_string`; accepts "p/q" or a bare integer.
inline Rational parse_rational(const std::string &text) {
  const auto slash = text.find('/');
  const auto whole = [&text](const std::string &part) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::logic_error &) {
      throw InvalidInput("bad rational: " + text);
    }
    if (used != part.size())
      throw InvalidInput("bad rational: " + text);
    return v;
  };
  if (slash == std::string::npos)
    return Rational(whole(text));
  const auto den = whole(text.substr(slash + 1));
  if (den == 0)
    throw InvalidInput("bad rational: " + text);
  return Rational(whole(text.substr(0, slash)), den);
}

inline double to_double(const Rational &q) { return boost::rational_cast<double>(q); }

} // namespace levicert
