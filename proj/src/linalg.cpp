#include "hermipade/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hermipade {

template <typename T>
Matrix<T> Matrix<T>::without_column(std::size_t c) const {
  Matrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0, k = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(r, k++) = (*this)(r, j);
    }
  }
  return out;
}

namespace {

Rational bareiss(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  int sign = 1;
  Rational prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  Rational det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

double lu_determinant(Matrix<double> a) {
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
    }
    if (a(p, k) == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace

template <>
Rational determinant(const Matrix<Rational>& a) {
  return bareiss(a);
}

template <>
double determinant(const Matrix<double>& a) {
  return lu_determinant(a);
}

template <typename T>
Nullspace<T> nullspace(const Matrix<T>& input, double tol) {
  Matrix<T> a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  double scale = 0.0;
  if constexpr (!ScalarTraits<T>::exact) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) scale = std::max(scale, std::fabs(a(r, c)));
  }
  const double pivot_tol = tol * std::max(scale, 1.0);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    if constexpr (ScalarTraits<T>::exact) {
      while (p < rows && sgn(a(p, col)) == 0) ++p;
      if (p == rows) continue;
    } else {
      for (std::size_t i = row + 1; i < rows; ++i) {
        if (std::fabs(a(i, col)) > std::fabs(a(p, col))) p = i;
      }
      if (std::fabs(a(p, col)) <= pivot_tol) continue;
    }
    if (p != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(row, c), a(p, c));
    }
    const T inv = T(1) / a(row, col);
    for (std::size_t c = col; c < cols; ++c) a(row, c) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == T(0)) continue;
      const T f = a(i, col);
      for (std::size_t c = col; c < cols; ++c) a(i, c) -= f * a(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  Nullspace<T> out;
  out.rank = pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a(r, f);
    out.free_columns.push_back(f);
    out.basis.push_back(std::move(v));
  }
  return out;
}

template class Matrix<Rational>;
template class Matrix<double>;
template Nullspace<Rational> nullspace(const Matrix<Rational>&, double);
template Nullspace<double> nullspace(const Matrix<double>&, double);

}  // namespace hermipade
