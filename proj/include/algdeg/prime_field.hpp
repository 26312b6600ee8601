#pragma once

#include <cstdint>

namespace algdeg {

// Element of GF(p), always stored in canonical form [0, p).
using Coeff = std::uint32_t;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Arithmetic in GF(p) for a prime p < 2^32. Products of two canonical
// elements fit in 64 bits, so reduction is a single `%`.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

  // Throws std::invalid_argument if p is not a prime below 2^32.
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>(std::uint64_t{a} * b % p_); }

  // a*b + c
  Coeff mul_add(Coeff a, Coeff b, Coeff c) const {
    return static_cast<Coeff>((std::uint64_t{a} * b + c) % p_);
  }

  Coeff pow(Coeff a, std::uint64_t e) const;

  // Throws DivisionByZero when a == 0.
  Coeff inv(Coeff a) const;

  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff from_int(std::int64_t v) const;
  Coeff from_uint(std::uint64_t v) const { return static_cast<Coeff>(v % p_); }

  // Representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const { return a > p_ / 2 ? std::int64_t{a} - p_ : std::int64_t{a}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace algdeg
