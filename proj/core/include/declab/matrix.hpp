#pragma once

// Dense integer matrices and the Smith normal form.

#include <cstddef>
#include <string>
#include <vector>

#include "declab/integer.hpp"

namespace declab {

class MatrixZ {
 public:
  MatrixZ() = default;
  MatrixZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatrixZ(std::size_t rows, std::size_t cols, const std::vector<std::vector<Int>>& entries);

  static MatrixZ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  // Rows [from, rows()) as a matrix.
  MatrixZ bottom_rows(std::size_t from) const;
  // Columns [from, cols()) as a matrix.
  MatrixZ right_columns(std::size_t from) const;
  std::string to_string() const;

  friend MatrixZ operator*(const MatrixZ& a, const MatrixZ& b);
  friend bool operator==(const MatrixZ&, const MatrixZ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const MatrixZ& m);

// u * m * v = d with d diagonal, diagonal entries non-negative and each
// dividing the next, u and v unimodular. The inverses are tracked alongside.
struct SmithForm {
  MatrixZ u, u_inv;
  MatrixZ d;
  MatrixZ v, v_inv;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

// Pivots on the smallest nonzero absolute value, ties broken by row-major
// position. The postconditions, including det u = det v = +-1, are verified on
// every call; a violation throws ValidationError.
SmithForm snf(const MatrixZ& m);

}  // namespace declab
