#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace algdeg {

// Exact unbounded integer for degree formulas.
using BigInt = boost::multiprecision::cpp_int;

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt big_pow(std::int64_t base, std::int64_t exp);

}  // namespace algdeg
