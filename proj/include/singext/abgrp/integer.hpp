#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <tuple>
#include <vector>

namespace singext::abgrp {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// Remainder in [0, |m|) for m != 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0)
    r += abs(m);
  return r;
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0)
    return {-a, -s0, -t0};
  return {a, s0, t0};
}

inline std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const IntVec& v);

} // namespace singext::abgrp
