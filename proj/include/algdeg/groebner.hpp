#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "algdeg/dense_matrix.hpp"
#include "algdeg/polynomial.hpp"

namespace algdeg {

using Clock = std::chrono::steady_clock;

struct GroebnerOptions {
  // Buchberger throws Timeout once this instant has passed.
  std::optional<Clock::time_point> deadline;
};

// Reduced Groebner basis: monic, interreduced, generators sorted by
// increasing leading monomial. The unit ideal is represented by {1}.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;

  const MonomialOrdering& ordering() const { return ring->order(); }
  bool is_unit() const { return generators.size() == 1 && generators[0].is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(*a.ring, *b.ring) && a.generators == b.generators;
  }
};

// Remainder of multivariate division of f by G under f's ring ordering. No
// term of the result is divisible by a leading monomial of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);
// Re-sorts f and G under `order` first; the result lives in that ordering.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrdering& order);

// lcm/lt(f) * f - lcm/lt(g) * g with unit leading coefficients.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger with the Gebauer-Moeller pair update (product and chain
// criteria) and the normal selection strategy: smallest lcm first, ties by
// pair index. Deterministic for a fixed input order.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const GroebnerOptions& options = {});
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrdering& order,
                         const GroebnerOptions& options = {});

// Post-checks for the two reducedness invariants and monicity.
bool is_reduced(const GroebnerBasis& gb);
// Every S-polynomial of a pair of generators reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

// True when every variable has a pure power among the leading monomials.
// The unit ideal counts as zero-dimensional (empty variety).
bool is_zero_dimensional(const GroebnerBasis& gb);

// Standard monomials of a zero-dimensional ideal, sorted increasing.
struct QuotientBasis {
  std::vector<Monomial> monomials;

  std::size_t size() const { return monomials.size(); }
};

// Throws DimensionError when the ideal is not zero-dimensional.
QuotientBasis quotient_basis(const GroebnerBasis& gb);
std::size_t quotient_dimension(const GroebnerBasis& gb);

// Linear algebra in R / I for a zero-dimensional ideal I.
class QuotientRing {
 public:
  // Throws DimensionError when the ideal is not zero-dimensional.
  explicit QuotientRing(GroebnerBasis gb);

  const GroebnerBasis& basis() const { return gb_; }
  const QuotientBasis& standard_monomials() const { return qb_; }
  std::size_t dimension() const { return qb_.size(); }

  // Coordinates of the normal form of f on the standard monomials.
  std::vector<Coeff> coordinates(const Polynomial& f) const;

  // Column j holds the coordinates of x_var * b_j. Columns are independent
  // normal forms, computed in parallel; the serial version is the reference.
  DenseMatrix multiplication_matrix(std::size_t var) const;
  DenseMatrix multiplication_matrix_serial(std::size_t var) const;

  // Monic univariate polynomial (in a one-variable ring) of least degree
  // with q(x_var) in I, from the first linear dependency among the
  // coordinate vectors of 1, x_var, x_var^2, ...
  Polynomial minimal_polynomial(std::size_t var) const;

 private:
  std::vector<Coeff> column(std::size_t var, std::size_t j) const;

  GroebnerBasis gb_;
  QuotientBasis qb_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

DenseMatrix multiplication_matrix(const GroebnerBasis& gb, std::size_t var);
Polynomial minimal_polynomial(const GroebnerBasis& gb, std::size_t var);

}  // namespace algdeg
