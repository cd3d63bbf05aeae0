#pragma once

#include <cstddef>
#include <vector>

#include "hermipade/scalar.hpp"

namespace hermipade {

// Minimal dense row-major matrix over either scalar mode.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Copy with column c removed.
  Matrix without_column(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Exact (fraction-free Bareiss) for Rational, partial-pivot LU for double.
// The 0x0 determinant is 1.
template <typename T>
T determinant(const Matrix<T>& a);

// Row-reduced echelon null space. Each basis vector has a 1 in its free
// column and zeros in all later free columns, and the vectors are returned
// in increasing free-column order. Floating pivots below tol * max|a_ij| are
// treated as zero.
template <typename T>
struct Nullspace {
  std::size_t rank = 0;
  std::vector<std::size_t> free_columns;
  std::vector<std::vector<T>> basis;
};

template <typename T>
Nullspace<T> nullspace(const Matrix<T>& a, double tol = kDefaultTolerance);

}  // namespace hermipade
