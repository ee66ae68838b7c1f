// Exact rational scalars over arbitrary-precision integers.
//
// Backed by boost::multiprecision over GMP; mpq_rational keeps values
// normalized (positive denominator, gcd(|num|, den) = 1, zero as 0/1), which
// makes equality a plain componentwise test everywhere above this header.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptcat {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Rat rat(long p, long q = 1) {
  if (q == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(Int(p), Int(q));
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Token format: "p" or "p/q" with optional leading '-'.
inline Rat parse_rational(std::string_view tok) {
  auto bad = [&] {
    return std::invalid_argument("bad rational token: '" + std::string(tok) + "'");
  };
  if (tok.empty()) throw bad();
  auto slash = tok.find('/');
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!is_int(tok)) throw bad();
    return Rat(Int(std::string(tok)));
  }
  auto p = tok.substr(0, slash);
  auto q = tok.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw bad();
  Int den{std::string(q)};
  if (den == 0) throw bad();
  return Rat(Int(std::string(p)), den);
}

inline std::string format_rational(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) {
    s += '/';
    s += rat_den(r).str();
  }
  return s;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace ptcat
