#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "algdeg/degree_formula.hpp"
#include "algdeg/polynomial.hpp"

namespace algdeg {

// An optimization instance reduced to its active set: minimize `objective`
// subject to `constraints` = 0, all in one n-variable ring.
struct ProblemSpec {
  RingPtr ring;
  Polynomial objective;
  std::vector<Polynomial> constraints;

  std::size_t n() const { return ring->nvars(); }
  std::size_t m() const { return constraints.size(); }
  const PrimeField& field() const { return ring->field(); }

  // (d0, d1, ..., dm) of the nonzero inputs.
  DegreeShape shape() const;

  // Throws ContextError on ring mismatch and ShapeError when m > n.
  void validate() const;
};

// Polynomial system in num_x original variables followed by
// num_multipliers Lagrange multipliers.
struct PolySystem {
  RingPtr ring;
  std::vector<Polynomial> equations;
  std::size_t num_x = 0;
  std::size_t num_multipliers = 0;

  std::size_t nvars() const { return ring->nvars(); }
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// grad f0 + sum_i l_i grad f_i = 0 and f_1 = ... = f_m = 0 in the ring
// (x_1..x_n, l_1..l_m), graded reverse lexicographic. Requires m >= 1.
PolySystem build_lagrange_system(const ProblemSpec& spec);

// grad f0 = 0 for unconstrained problems.
PolySystem build_gradient_system(const ProblemSpec& spec);

// Lagrange system when m >= 1, gradient system otherwise.
PolySystem build_critical_system(const ProblemSpec& spec);

// n x (m + 1) matrix with entry (j, i) = d f_i / d x_j.
PolyMatrix jacobian_like_matrix(const ProblemSpec& spec);

// Determinant of the submatrix on the given rows and columns: cofactor
// expansion up to 4x4, fraction-free (Bareiss) elimination beyond.
Polynomial minor_expansion(const PolyMatrix& matrix, std::span<const std::size_t> rows,
                           std::span<const std::size_t> cols);

// f_1..f_m together with every (m + 1) x (m + 1) minor of the Jacobian-like
// matrix, in the x variables only. Requires m + 1 <= n.
PolySystem build_minor_system(const ProblemSpec& spec);

}  // namespace algdeg
