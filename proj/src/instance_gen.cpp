#include "algdeg/instance_gen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "algdeg/dense_matrix.hpp"
#include "algdeg/errors.hpp"

namespace algdeg {

CoefficientStream::CoefficientStream(std::uint64_t seed, const PrimeField& field)
    : engine_(seed), field_(field) {
  const std::uint64_t p = field.modulus();
  limit_ = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
}

Coeff CoefficientStream::next() {
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit_);
  return field_.from_uint(x);
}

std::vector<Coeff> CoefficientStream::next_n(std::size_t count) {
  std::vector<Coeff> out(count);
  for (auto& c : out) c = next();
  return out;
}

namespace {

// All exponent vectors of exactly `degree`, lexicographically descending.
void exact_degree(std::size_t nvars, int degree, std::size_t var, std::vector<int>& exps,
                  std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    exps[var] = degree;
    out.emplace_back(std::span<const int>(exps));
    return;
  }
  for (int e = degree; e >= 0; --e) {
    exps[var] = e;
    exact_degree(nvars, degree - e, var + 1, exps, out);
  }
  exps[var] = 0;
}

Polynomial affine_power_difference(const RingPtr& ring, int rows, int power, CoefficientStream& stream) {
  Polynomial lead = random_affine(ring, stream);
  Polynomial q = lead.pow(static_cast<unsigned>(power));
  for (int j = 0; j < rows; ++j) q -= random_affine(ring, stream).pow(static_cast<unsigned>(power));
  return q;
}

ProblemSpec gen_cone(ConeShape shape, const GenConfig& config) {
  shape.validate();
  normalize_rows(shape);
  auto ring = Ring::make(static_cast<std::size_t>(shape.n), config.field);
  CoefficientStream stream(config.seed, config.field);
  ProblemSpec spec{ring, random_affine(ring, stream, false), {}};
  for (int i = 0; i < shape.k; ++i) spec.constraints.push_back(random_affine(ring, stream));
  for (int r : shape.rows) spec.constraints.push_back(affine_power_difference(ring, r, shape.p, stream));
  return spec;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(nvars, 0);
  for (int d = 0; d <= degree; ++d) exact_degree(nvars, d, 0, exps, out);
  return out;
}

Polynomial random_dense(const RingPtr& ring, int degree, CoefficientStream& stream) {
  if (degree < 0) throw DegreeError("random_dense: negative degree");
  std::vector<Term> terms;
  for (auto& m : monomials_up_to(ring->nvars(), degree)) terms.push_back({m, stream.next()});
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial random_dense(std::size_t n, int degree, const GenConfig& config) {
  CoefficientStream stream(config.seed, config.field);
  return random_dense(Ring::make(n, config.field), degree, stream);
}

Polynomial random_affine(const RingPtr& ring, CoefficientStream& stream, bool with_constant) {
  const std::size_t n = ring->nvars();
  std::vector<Term> terms;
  for (std::size_t j = 0; j < n; ++j) terms.push_back({Monomial::variable(n, j), stream.next()});
  if (with_constant) terms.push_back({Monomial::one(n), stream.next()});
  return Polynomial::from_terms(ring, std::move(terms));
}

ProblemSpec gen_general(int n, std::span<const int> degrees, const GenConfig& config) {
  DegreeShape shape{n, std::vector<int>(degrees.begin(), degrees.end())};
  shape.validate();
  auto ring = Ring::make(static_cast<std::size_t>(n), config.field);
  CoefficientStream stream(config.seed, config.field);
  ProblemSpec spec{ring, random_dense(ring, degrees[0], stream), {}};
  for (std::size_t i = 1; i < degrees.size(); ++i) spec.constraints.push_back(random_dense(ring, degrees[i], stream));
  return spec;
}

ProblemSpec gen_qcqp(int n, int m, const GenConfig& config) {
  if (m < 0) throw ShapeError("qcqp: negative constraint count");
  std::vector<int> degrees(static_cast<std::size_t>(m) + 1, 2);
  return gen_general(n, degrees, config);
}

ProblemSpec gen_socp(ConeShape shape, const GenConfig& config) {
  if (shape.p != 2) throw ShapeError("socp: cone order must be 2");
  return gen_cone(std::move(shape), config);
}

ProblemSpec gen_pocp(ConeShape shape, const GenConfig& config) { return gen_cone(std::move(shape), config); }

std::vector<std::size_t> normalize_rows(ConeShape& shape) {
  std::vector<std::size_t> perm(shape.rows.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return shape.rows[a] < shape.rows[b]; });
  std::vector<int> sorted;
  for (std::size_t i : perm) sorted.push_back(shape.rows[i]);
  shape.rows = std::move(sorted);
  return perm;
}

std::size_t quadratic_form_rank(const Polynomial& q) {
  const auto& field = q.field();
  if (field.modulus() == 2) throw ContextError("quadratic_form_rank: characteristic 2");
  const Polynomial h = homogenize(q, 2);
  const std::size_t n = h.nvars();
  const Coeff half = field.inv(2);
  DenseMatrix s(n, n);
  for (const auto& t : h.terms()) {
    std::size_t first = n, second = n;
    for (std::size_t v = 0; v < n; ++v) {
      for (int e = 0; e < t.mono[v]; ++e) (first == n ? first : second) = v;
    }
    if (second == n) second = first;
    if (first == second) {
      s(first, first) = t.coeff;
    } else {
      s(first, second) = field.mul(t.coeff, half);
      s(second, first) = s(first, second);
    }
  }
  return row_reduce(std::move(s), field).rank();
}

}  // namespace algdeg
