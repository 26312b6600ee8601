#include "algdeg/combinatorics.hpp"

#include <stdexcept>

namespace algdeg {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  // r stays integral: after step i it equals C(n - k + i, i).
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt big_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("big_pow: negative exponent");
  BigInt r = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

}  // namespace algdeg
