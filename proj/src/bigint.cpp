#include "permgen/bigint.hpp"

#include <stdexcept>

namespace permgen {

BigInt factorial(uint64_t n) {
  BigInt r = 1;
  for (uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

BigInt ipow(const BigInt& base, uint64_t exponent) {
  BigInt r = 1, b = base;
  uint64_t e = exponent;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace permgen
