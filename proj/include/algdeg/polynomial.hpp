#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "algdeg/monomial.hpp"
#include "algdeg/prime_field.hpp"

namespace algdeg {

// Polynomial ring GF(p)[v_0, ..., v_{n-1}] with a fixed term order.
// Variables are anonymous indices; naming is the caller's business.
class Ring {
 public:
  Ring(std::size_t nvars, PrimeField field, MonomialOrdering order = MonomialOrdering::grevlex());

  static std::shared_ptr<const Ring> make(std::size_t nvars, PrimeField field,
                                          MonomialOrdering order = MonomialOrdering::grevlex()) {
    return std::make_shared<const Ring>(nvars, field, std::move(order));
  }

  std::size_t nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  const MonomialOrdering& order() const { return order_; }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::size_t nvars_;
  PrimeField field_;
  MonomialOrdering order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial: terms sorted strictly decreasing under the ring's
// order, no zero coefficients. Immutable through the public interface
// except for the compound assignment operators.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, Coeff c);
  // Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->nvars(); }

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  // Coefficient of m (zero if absent); binary search on the sorted terms.
  Coeff coeff(const Monomial& m) const;

  // Throws DegreeError for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(Polynomial f, const Polynomial& g) { return f *= g; }

  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  // this + c * m * g in a single merge pass.
  Polynomial add_scaled_shifted(Coeff c, const Monomial& m, const Polynomial& g) const;
  Polynomial monic() const;
  Polynomial without_leading_term() const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Throws ContextError unless both polynomials live in equal rings.
void require_same_ring(const Polynomial& f, const Polynomial& g);
bool same_ring(const Ring& a, const Ring& b);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

// Homogenization to degree d. The result lives in a ring with one more
// variable; the homogenizing variable x0 is index 0 and x_j moves to j + 1.
// Throws DegreeError when d < total_degree(f).
Polynomial homogenize(const Polynomial& f, int d);
// Sets x0 (index 0) to 1 and drops it from the ring.
Polynomial dehomogenize(const Polynomial& h);

// Throws ContextError when point.size() != nvars.
Coeff evaluate(const Polynomial& f, std::span<const Coeff> point);

// Re-expresses f in `target`, sending variable i to var_map[i].
Polynomial change_ring(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map);
// Same variables in a ring with another ordering.
Polynomial with_ordering(const Polynomial& f, const MonomialOrdering& order);
// Identity embedding of the first nvars(f) variables into a larger ring.
Polynomial embed(const Polynomial& f, const RingPtr& target);

// Quotient of an exact division; throws std::domain_error if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace algdeg
