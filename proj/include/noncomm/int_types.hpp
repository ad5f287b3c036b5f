#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace noncomm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

/// Floor of the square root of a non-negative integer.
inline Int isqrt(const Int& v) {
  return boost::multiprecision::sqrt(v);
}

inline bool is_perfect_square(const Int& v, Int* root = nullptr) {
  if (v < 0) return false;
  Int r = isqrt(v);
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

/// Writes d = s^2 * f with f squarefree (for the value ranges used here,
/// trial division is plenty). Returns {s, f}.
inline std::pair<Int, Int> split_square(const Int& d) {
  Int s = 1, f = 1, rest = d;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= rest;
  return {s, f};
}

}  // namespace noncomm
