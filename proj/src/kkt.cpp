#include "algdeg/kkt.hpp"

#include <numeric>
#include <string>

#include "algdeg/errors.hpp"

namespace algdeg {

DegreeShape ProblemSpec::shape() const {
  DegreeShape s{static_cast<int>(n()), {}};
  s.degrees.push_back(objective.total_degree());
  for (const auto& c : constraints) s.degrees.push_back(c.total_degree());
  return s;
}

void ProblemSpec::validate() const {
  if (!same_ring(objective.ring(), *ring)) throw ContextError("problem: objective lives in another ring");
  for (const auto& c : constraints) {
    if (!same_ring(c.ring(), *ring)) throw ContextError("problem: constraint lives in another ring");
  }
  if (m() > n()) {
    throw ShapeError("problem: " + std::to_string(m()) + " constraints exceed " + std::to_string(n()) +
                     " variables");
  }
}

PolySystem build_lagrange_system(const ProblemSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n();
  const std::size_t m = spec.m();
  if (m == 0) throw ShapeError("lagrange system needs at least one constraint; use the gradient system");
  PolySystem sys{Ring::make(n + m, spec.field()), {}, n, m};
  const Polynomial f0 = embed(spec.objective, sys.ring);
  std::vector<Polynomial> fs;
  for (const auto& c : spec.constraints) fs.push_back(embed(c, sys.ring));
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial eq = partial_derivative(f0, j);
    for (std::size_t i = 0; i < m; ++i) {
      eq += Polynomial::variable(sys.ring, n + i) * partial_derivative(fs[i], j);
    }
    sys.equations.push_back(std::move(eq));
  }
  for (auto& f : fs) sys.equations.push_back(std::move(f));
  return sys;
}

PolySystem build_gradient_system(const ProblemSpec& spec) {
  spec.validate();
  if (spec.m() != 0) throw ShapeError("gradient system is for unconstrained problems");
  PolySystem sys{spec.ring, {}, spec.n(), 0};
  for (std::size_t j = 0; j < spec.n(); ++j) sys.equations.push_back(partial_derivative(spec.objective, j));
  return sys;
}

PolySystem build_critical_system(const ProblemSpec& spec) {
  return spec.m() == 0 ? build_gradient_system(spec) : build_lagrange_system(spec);
}

PolyMatrix jacobian_like_matrix(const ProblemSpec& spec) {
  spec.validate();
  PolyMatrix mat;
  for (std::size_t j = 0; j < spec.n(); ++j) {
    std::vector<Polynomial> row;
    row.push_back(partial_derivative(spec.objective, j));
    for (const auto& c : spec.constraints) row.push_back(partial_derivative(c, j));
    mat.push_back(std::move(row));
  }
  return mat;
}

namespace {

Polynomial cofactor_det(const PolyMatrix& mat, std::vector<std::size_t> rows, std::span<const std::size_t> cols) {
  const RingPtr& ring = mat.at(rows.at(0)).at(cols[0]).ring_ptr();
  if (rows.size() == 1) return mat[rows[0]][cols[0]];
  // Expand along the first column.
  Polynomial det(ring);
  const std::size_t c0 = cols[0];
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Polynomial& entry = mat[rows[k]][c0];
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != k) sub_rows.push_back(rows[r]);
    }
    Polynomial term = entry * cofactor_det(mat, std::move(sub_rows), cols.subspan(1));
    if (k % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// Bareiss: a[i][j] <- (a[k][k] a[i][j] - a[i][k] a[k][j]) / a[k-1][k-1],
// every division exact.
Polynomial bareiss_det(const PolyMatrix& mat, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  const std::size_t s = rows.size();
  const RingPtr& ring = mat[rows[0]][cols[0]].ring_ptr();
  std::vector<std::vector<Polynomial>> a;
  for (std::size_t r : rows) {
    std::vector<Polynomial> row;
    for (std::size_t c : cols) row.push_back(mat[r][c]);
    a.push_back(std::move(row));
  }
  bool negate = false;
  Polynomial prev = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < s; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < s && a[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == s) return Polynomial(ring);
      std::swap(a[k], a[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < s; ++i) {
      for (std::size_t j = k + 1; j < s; ++j) {
        Polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(num, prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[s - 1][s - 1] : a[s - 1][s - 1];
}

}  // namespace

Polynomial minor_expansion(const PolyMatrix& matrix, std::span<const std::size_t> rows,
                           std::span<const std::size_t> cols) {
  if (rows.size() != cols.size() || rows.empty()) throw ShapeError("minor: index sets must be nonempty and equal");
  for (std::size_t r : rows) {
    if (r >= matrix.size()) throw ShapeError("minor: row index out of range");
  }
  for (std::size_t c : cols) {
    if (c >= matrix[0].size()) throw ShapeError("minor: column index out of range");
  }
  if (rows.size() <= 4) return cofactor_det(matrix, std::vector<std::size_t>(rows.begin(), rows.end()), cols);
  return bareiss_det(matrix, rows, cols);
}

PolySystem build_minor_system(const ProblemSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n();
  const std::size_t m = spec.m();
  if (m + 1 > n) throw ShapeError("minor system needs m + 1 <= n");
  PolySystem sys{spec.ring, spec.constraints, n, 0};
  const PolyMatrix mat = jacobian_like_matrix(spec);
  std::vector<std::size_t> cols(m + 1);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  // Enumerate (m+1)-subsets of rows in lexicographic order.
  std::vector<std::size_t> rows(m + 1);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  for (;;) {
    sys.equations.push_back(minor_expansion(mat, rows, cols));
    std::size_t i = m + 1;
    while (i-- > 0) {
      if (rows[i] != i + n - (m + 1)) break;
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++rows[i];
    for (std::size_t j = i + 1; j <= m; ++j) rows[j] = rows[j - 1] + 1;
  }
  return sys;
}

}  // namespace algdeg
