#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pframe {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

// Exact rational from a double (every finite double is rational).
inline Rational rational_from_double(double x) { return Rational(x); }

// Parse "p/q", "-3", or a finite decimal like "2.5".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(BigInt(digits), den);
  }
  return Rational(BigInt(s));
}

inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace pframe
