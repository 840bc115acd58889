#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hinv {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer &a) { return a < 0 ? Integer(-a) : a; }

// Quotient rounded towards negative infinity; b != 0.
inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

// Representative of a modulo m in [0, m); m > 0.
inline Integer mod_floor(const Integer &a, const Integer &m) {
  Integer r = a % m;
  if (r < 0)
    r += m;
  return r;
}

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

struct ExtendedGcd {
  Integer g, s, t; // g = s*a + t*b, g >= 0
};

inline ExtendedGcd extended_gcd(const Integer &a, const Integer &b) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    Integer s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Integer t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, s0, t0};
}

inline std::string to_string(const Integer &a) { return a.str(); }

inline long long to_ll(const Integer &a) { return a.convert_to<long long>(); }

} // namespace hinv
