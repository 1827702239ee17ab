#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace giso {

// Group orders overflow 64 bits already at degree 21, so all order
// arithmetic is done with arbitrary precision integers.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline BigInt bigpow(BigInt base, int exp) {
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline int ceil_log2(BigInt n) {
  // smallest e with 2^e >= n, for n >= 1
  int e = 0;
  BigInt p = 1;
  while (p < n) {
    p <<= 1;
    ++e;
  }
  return e;
}

}  // namespace giso
