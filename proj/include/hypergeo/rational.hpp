// Exact rational scalar type and parsing helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypergeo {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p/q", integers, and plain decimals ("-0.25" -> -1/4 exactly).
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in \"" + s + "\"");
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(Int(s));
  std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
  bool neg = !head.empty() && head[0] == '-';
  if (head == "-" || head.empty()) head = neg ? "-0" : "0";
  Int ipart(head);
  Int scale = 1;
  Int fpart = 0;
  for (char c : frac) {
    if (c < '0' || c > '9') throw std::invalid_argument("parse_rational: bad decimal \"" + s + "\"");
    fpart = fpart * 10 + (c - '0');
    scale *= 10;
  }
  Rational r = Rational(ipart) + (neg ? -Rational(fpart, scale) : Rational(fpart, scale));
  return r;
}

inline int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace hypergeo
