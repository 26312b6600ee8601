#include "algdeg/dense_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace algdeg {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

// row[c..] -= factor * pivot_row[c..]
void eliminate_row(std::span<Coeff> row, std::span<const Coeff> pivot_row, std::size_t from, Coeff factor,
                   const PrimeField& field) {
  const Coeff neg = field.neg(factor);
  for (std::size_t c = from; c < row.size(); ++c) {
    if (pivot_row[c] != 0) row[c] = field.mul_add(neg, pivot_row[c], row[c]);
  }
}

// Finds a pivot in column `col` at or below `rank`, swaps it up and scales
// it to 1. Returns false when the column has no pivot.
bool prepare_pivot(DenseMatrix& m, std::size_t rank, std::size_t col, const PrimeField& field) {
  std::size_t pr = rank;
  while (pr < m.rows() && m(pr, col) == 0) ++pr;
  if (pr == m.rows()) return false;
  if (pr != rank) {
    auto a = m.row(pr);
    auto b = m.row(rank);
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(a[c], b[c]);
  }
  const Coeff inv = field.inv(m(rank, col));
  for (auto& x : m.row(rank)) x = field.mul(x, inv);
  return true;
}

}  // namespace

RowEchelon row_reduce_serial(DenseMatrix m, const PrimeField& field) {
  RowEchelon out;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (!prepare_pivot(m, rank, col, field)) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col) == 0) continue;
      eliminate_row(m.row(r), m.row(rank), col, m(r, col), field);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.reduced = std::move(m);
  return out;
}

RowEchelon row_reduce(DenseMatrix m, const PrimeField& field) {
  RowEchelon out;
  std::size_t rank = 0;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    if (!prepare_pivot(m, rank, col, field)) continue;
    const auto pivot = static_cast<std::ptrdiff_t>(rank);
#pragma omp parallel for schedule(static) if (m.rows() * (m.cols() - col) > 4096)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (r == pivot || m(ur, col) == 0) continue;
      eliminate_row(m.row(ur), m.row(rank), col, m(ur, col), field);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Coeff> mat_vec_serial(const DenseMatrix& m, std::span<const Coeff> v, const PrimeField& field) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Coeff> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Coeff acc = 0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) acc = field.mul_add(row[c], v[c], acc);
    out[r] = acc;
  }
  return out;
}

std::vector<Coeff> mat_vec(const DenseMatrix& m, std::span<const Coeff> v, const PrimeField& field) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Coeff> out(m.rows(), 0);
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(static) if (m.rows() * m.cols() > 4096)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    Coeff acc = 0;
    auto row = m.row(static_cast<std::size_t>(r));
    for (std::size_t c = 0; c < m.cols(); ++c) acc = field.mul_add(row[c], v[c], acc);
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& field) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  DenseMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (a.rows() * a.cols() * b.cols() > 32768)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Coeff aik = a(ui, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(ui, j) = field.mul_add(aik, b(k, j), out(ui, j));
    }
  }
  return out;
}

Coeff determinant(DenseMatrix m, const PrimeField& field) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  Coeff det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && m(pr, col) == 0) ++pr;
    if (pr == n) return 0;
    if (pr != col) {
      auto a = m.row(pr);
      auto b = m.row(col);
      for (std::size_t c = 0; c < n; ++c) std::swap(a[c], b[c]);
      det = field.neg(det);
    }
    det = field.mul(det, m(col, col));
    const Coeff inv = field.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      eliminate_row(m.row(r), m.row(col), col, field.mul(m(r, col), inv), field);
    }
  }
  return det;
}

}  // namespace algdeg
