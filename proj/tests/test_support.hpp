#pragma once

// Random generators and independent oracles shared by the unit tests.
// Nothing here calls into the code paths the oracles check.

#include <cstdint>
#include <random>
#include <vector>

#include "algdeg/dense_matrix.hpp"
#include "algdeg/poly_text.hpp"
#include "algdeg/polynomial.hpp"

namespace algdeg::testing {

inline constexpr std::uint32_t kBigPrime = 2147483647u;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Coeff coeff(const PrimeField& f) { return static_cast<Coeff>(rng_() % f.modulus()); }
  Coeff nonzero(const PrimeField& f) { return 1 + static_cast<Coeff>(rng_() % (f.modulus() - 1)); }

  Monomial monomial(std::size_t nvars, int max_degree) {
    Monomial m(nvars);
    int budget = uniform(0, max_degree);
    for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
      int e = uniform(0, budget);
      m.set(v, e);
      budget -= e;
    }
    return m;
  }

  // Sparse polynomial with up to `terms` random terms of degree <= max_degree.
  Polynomial poly(const RingPtr& ring, int max_degree, int terms) {
    std::vector<Term> t;
    for (int i = 0; i < terms; ++i) t.push_back({monomial(ring->nvars(), max_degree), coeff(ring->field())});
    return Polynomial::from_terms(ring, std::move(t));
  }

  // Every monomial of degree <= d with a random coefficient.
  Polynomial dense(const RingPtr& ring, int d) {
    std::vector<Term> t;
    std::vector<int> e(ring->nvars(), 0);
    enumerate(ring->nvars(), d, 0, e, [&](const std::vector<int>& ex) {
      t.push_back({Monomial(std::span<const int>(ex)), coeff(ring->field())});
    });
    return Polynomial::from_terms(ring, std::move(t));
  }

  std::vector<Coeff> point(const PrimeField& f, std::size_t n) {
    std::vector<Coeff> p(n);
    for (auto& c : p) c = coeff(f);
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  template <class F>
  static void enumerate(std::size_t n, int budget, std::size_t v, std::vector<int>& e, F&& f) {
    if (v == n) {
      f(e);
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      e[v] = k;
      enumerate(n, budget - k, v + 1, e, f);
    }
    e[v] = 0;
  }

  std::mt19937_64 rng_;
};

inline Polynomial parse(const std::string& s, const RingPtr& ring) {
  return parse_polynomial(s, ring, default_names(ring->nvars() > 0 ? ring->nvars() : 0));
}

// Coefficients c_0..c_{k-1} of the unique polynomial of degree < k through
// (xs[i], ys[i]), by Lagrange interpolation.
inline std::vector<Coeff> interpolate(const std::vector<Coeff>& xs, const std::vector<Coeff>& ys,
                                      const PrimeField& f) {
  const std::size_t k = xs.size();
  std::vector<Coeff> out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    // basis = prod_{j != i} (t - x_j) / (x_i - x_j)
    std::vector<Coeff> basis{1};
    Coeff denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<Coeff> next(basis.size() + 1, 0);
      for (std::size_t a = 0; a < basis.size(); ++a) {
        next[a + 1] = f.add(next[a + 1], basis[a]);
        next[a] = f.sub(next[a], f.mul(basis[a], xs[j]));
      }
      basis = std::move(next);
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    const Coeff scale = f.mul(ys[i], f.inv(denom));
    for (std::size_t a = 0; a < k; ++a) out[a] = f.add(out[a], f.mul(basis[a], scale));
  }
  return out;
}

// Leibniz expansion over all permutations.
inline Coeff leibniz_det(const DenseMatrix& m, const PrimeField& f) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Coeff det = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Coeff term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
    det = inversions % 2 == 0 ? f.add(det, term) : f.sub(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Characteristic polynomial det(t I - M), low coefficient first, from
// determinant values at n + 1 points.
inline std::vector<Coeff> charpoly_by_interpolation(const DenseMatrix& m, const PrimeField& f) {
  const std::size_t n = m.rows();
  std::vector<Coeff> xs, ys;
  for (std::size_t s = 0; s <= n; ++s) {
    const Coeff t = static_cast<Coeff>(s + 1);
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = f.sub(i == j ? t : 0, m(i, j));
    }
    xs.push_back(t);
    ys.push_back(determinant(a, f));
  }
  return interpolate(xs, ys, f);
}

}  // namespace algdeg::testing
