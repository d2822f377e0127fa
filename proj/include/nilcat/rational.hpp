#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "nilcat/errors.hpp"

namespace nilcat {

/// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
/// positive denominator. Every computation in this library is exact; there is
/// no floating point anywhere.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Parses "n" or "n/d" (grammar ^-?[0-9]+(/[0-9]+)?$) into a canonical
/// rational. Anything else, including floats like "1.5", is rejected.
inline Rational parse_rational(std::string_view s) {
  const auto fail = [&] { throw ParseError("bad rational: '" + std::string(s) + "'"); };
  std::size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') ++pos;
  std::size_t num_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == num_begin) fail();
  std::string num(s.substr(0, pos));
  std::string den = "1";
  if (pos < s.size()) {
    if (s[pos] != '/') fail();
    ++pos;
    std::size_t den_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == den_begin || pos != s.size()) fail();
    den = std::string(s.substr(den_begin));
  }
  mpz_class n(num), d(den);
  if (sgn(d) == 0) fail();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Canonical string form: "n" when the denominator is 1, else "n/d".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace nilcat
