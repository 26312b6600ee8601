#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "algdeg/prime_field.hpp"

namespace algdeg {

// Row-major dense matrix over GF(p).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

// Result of Gauss-Jordan elimination: `reduced` is the reduced row echelon
// form, `pivots[i]` the pivot column of row i (so rank = pivots.size()).
struct RowEchelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination. The parallel kernel distributes the row
// updates of each pivot step across OpenMP threads; the serial version is
// the reference it is tested against. Both produce identical output.
RowEchelon row_reduce(DenseMatrix m, const PrimeField& field);
RowEchelon row_reduce_serial(DenseMatrix m, const PrimeField& field);

std::vector<Coeff> mat_vec(const DenseMatrix& m, std::span<const Coeff> v, const PrimeField& field);
std::vector<Coeff> mat_vec_serial(const DenseMatrix& m, std::span<const Coeff> v, const PrimeField& field);

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& field);

// Determinant by elimination; square matrices only.
Coeff determinant(DenseMatrix m, const PrimeField& field);

}  // namespace algdeg
