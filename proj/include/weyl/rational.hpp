#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "weyl/errors.hpp"

namespace weyl {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& n) { return n.str(); }

// Canonical text form: "n", or "n/d" when d > 1.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

inline BigInt factorial(int k) {
  BigInt acc = 1;
  for (int t = 2; t <= k; ++t) acc *= t;
  return acc;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt acc = 1;
  for (int t = 1; t <= k; ++t) {
    acc *= n - k + t;
    acc /= t;
  }
  return acc;
}

// x(x-1)...(x-k+1) for any integer x; the empty product 1 when k = 0.
inline BigInt falling_factorial(long long x, int k) {
  BigInt acc = 1;
  for (int t = 0; t < k; ++t) acc *= BigInt(x - t);
  return acc;
}

inline int checked_add(int a, int b) {
  int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw exponent_overflow("integer overflow in exponent arithmetic");
  }
  return out;
}

inline int checked_sub(int a, int b) {
  int out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw exponent_overflow("integer overflow in exponent arithmetic");
  }
  return out;
}

}  // namespace weyl
