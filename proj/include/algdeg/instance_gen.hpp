#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "algdeg/degree_formula.hpp"
#include "algdeg/kkt.hpp"

namespace algdeg {

struct GenConfig {
  std::uint64_t seed = 0;
  PrimeField field{};
};

// Uniform GF(p) coefficients from a std::mt19937_64 stream seeded with the
// config seed. Each coefficient consumes raw 64-bit draws until one falls
// below the largest multiple of p, then takes it mod p. Both the engine and
// this reduction are fully specified, so instances reproduce anywhere.
class CoefficientStream {
 public:
  CoefficientStream(std::uint64_t seed, const PrimeField& field);

  Coeff next();
  std::vector<Coeff> next_n(std::size_t count);

 private:
  std::mt19937_64 engine_;
  PrimeField field_;
  std::uint64_t limit_;
};

// Exponent vectors of total degree <= d: by degree ascending, and within a
// degree lexicographically descending (x1^d first).
std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree);

// Every monomial of degree <= d gets the next coefficient of the stream,
// in monomials_up_to order.
Polynomial random_dense(const RingPtr& ring, int degree, CoefficientStream& stream);
Polynomial random_dense(std::size_t n, int degree, const GenConfig& config);

// c^T x + b with coefficients drawn for x1..xn first, then b.
Polynomial random_affine(const RingPtr& ring, CoefficientStream& stream, bool with_constant = true);

// Dense objective of degree d0 and dense constraints of degrees d1..dm.
ProblemSpec gen_general(int n, std::span<const int> degrees, const GenConfig& config);

// Dense quadratic objective and m dense quadratic constraints.
ProblemSpec gen_qcqp(int n, int m, const GenConfig& config);

// Linear objective c^T x, k random affine constraints and m - k constraints
// (a^T x + b)^p - sum_j (C_j x + d_j)^p with r_i rows each; p = 2 gives the
// second-order cone in squared form. Row counts are sorted ascending first.
ProblemSpec gen_socp(ConeShape shape, const GenConfig& config);
ProblemSpec gen_pocp(ConeShape shape, const GenConfig& config);

// Sorts shape.rows ascending in place and returns the permutation applied
// (new position i holds old entry perm[i]).
std::vector<std::size_t> normalize_rows(ConeShape& shape);

// Rank of the symmetric matrix of the homogenized quadratic form of q.
// Requires an odd characteristic.
std::size_t quadratic_form_rank(const Polynomial& q);

}  // namespace algdeg
