#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hermipade/scalar.hpp"
#include "hermipade/series.hpp"

namespace hermipade {

// Dense algebraic polynomial, coefficients in ascending powers.
template <typename T>
class Polynomial {
 public:
  Polynomial() : coeffs_{T(0)} {}
  explicit Polynomial(std::vector<T> coeffs);

  static Polynomial monomial(std::size_t power, const T& c = T(1));

  const std::vector<T>& coeffs() const { return coeffs_; }
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  // Highest power with a nonzero coefficient; -1 for the zero polynomial.
  int degree(double tol = 0.0) const;
  bool is_zero(double tol = 0.0) const { return degree(tol) < 0; }
  // Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  int valuation(double tol = 0.0) const;

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const T& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

  // Exact comparison after trimming trailing zeros.
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.trimmed().coeffs_ == b.trimmed().coeffs_; }

  Polynomial trimmed(double tol = 0.0) const;
  // Drops the factor z^s from a polynomial divisible by it.
  Polynomial shift_down(std::size_t s) const;

  TruncatedSeries<T> as_series(std::size_t L) const;
  static Polynomial truncate(const TruncatedSeries<T>& s, int max_degree);

 private:
  static Polynomial multiply(const Polynomial& a, const Polynomial& b);

  std::vector<T> coeffs_;
};

template <typename T>
Polynomial<double> to_double(const Polynomial<T>& p);

// Quotient and remainder over the rationals.
struct RationalDivision {
  Polynomial<Rational> quotient;
  Polynomial<Rational> remainder;
};
RationalDivision divide(const Polynomial<Rational>& num, const Polynomial<Rational>& den);

// Monic greatest common divisor over the rationals (zero when both are zero).
Polynomial<Rational> gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b);

// Complex roots from the eigenvalues of the balanced companion matrix.
// Leading and trailing zero coefficients are handled; throws DomainError for
// the zero polynomial.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

// Converts sum c_l T_l(x) to ascending power-basis coefficients.
std::vector<double> chebyshev_t_to_power(const std::vector<double>& c);

}  // namespace hermipade
