#include "hermipade/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "hermipade/errors.hpp"

namespace hermipade {

template <typename T>
Polynomial<T>::Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(T(0));
}

template <typename T>
Polynomial<T> Polynomial<T>::monomial(std::size_t power, const T& c) {
  std::vector<T> v(power + 1, T(0));
  v[power] = c;
  return Polynomial(std::move(v));
}

template <typename T>
int Polynomial<T>::degree(double tol) const {
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    if (!ScalarTraits<T>::is_zero(coeffs_[i], tol)) return i;
  }
  return -1;
}

template <typename T>
int Polynomial<T>::valuation(double tol) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!ScalarTraits<T>::is_zero(coeffs_[i], tol)) return static_cast<int>(i);
  }
  return -1;
}

template <typename T>
double Polynomial<T>::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + to_double(coeffs_[i]);
  return acc;
}

template <typename T>
std::complex<double> Polynomial<T>::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + to_double(coeffs_[i]);
  return acc;
}

template <typename T>
Polynomial<T>& Polynomial<T>::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

template <typename T>
Polynomial<T>& Polynomial<T>::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), T(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

template <typename T>
Polynomial<T>& Polynomial<T>::operator*=(const T& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

template <typename T>
Polynomial<T> Polynomial<T>::multiply(const Polynomial& a, const Polynomial& b) {
  std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == T(0)) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

template <typename T>
Polynomial<T> Polynomial<T>::trimmed(double tol) const {
  const int d = degree(tol);
  if (d < 0) return Polynomial();
  return Polynomial(std::vector<T>(coeffs_.begin(), coeffs_.begin() + d + 1));
}

template <typename T>
Polynomial<T> Polynomial<T>::shift_down(std::size_t s) const {
  if (s >= coeffs_.size()) return Polynomial();
  return Polynomial(std::vector<T>(coeffs_.begin() + static_cast<std::ptrdiff_t>(s), coeffs_.end()));
}

template <typename T>
TruncatedSeries<T> Polynomial<T>::as_series(std::size_t L) const {
  std::vector<T> c(L, T(0));
  for (std::size_t i = 0; i < L && i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  return TruncatedSeries<T>(Basis::power, std::move(c));
}

template <typename T>
Polynomial<T> Polynomial<T>::truncate(const TruncatedSeries<T>& s, int max_degree) {
  if (max_degree < 0) return Polynomial();
  std::vector<T> c(static_cast<std::size_t>(max_degree) + 1, T(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s.effective(i);
  return Polynomial(std::move(c));
}

template <typename T>
Polynomial<double> to_double(const Polynomial<T>& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(to_double(v));
  return Polynomial<double>(std::move(c));
}

template class Polynomial<Rational>;
template class Polynomial<double>;
template Polynomial<double> to_double(const Polynomial<Rational>&);
template Polynomial<double> to_double(const Polynomial<double>&);

RationalDivision divide(const Polynomial<Rational>& num, const Polynomial<Rational>& den) {
  const Polynomial<Rational> d = den.trimmed();
  const int dd = d.degree();
  if (dd < 0) throw DivisionByNonUnit("polynomial division by zero");
  std::vector<Rational> rem = num.trimmed().coeffs();
  const int nd = num.degree();
  if (nd < dd) return {Polynomial<Rational>(), num.trimmed()};
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd) + 1, Rational(0));
  const Rational& lead = d.coeffs()[static_cast<std::size_t>(dd)];
  for (int i = nd; i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (sgn(c) == 0) continue;
    for (int t = 0; t <= dd; ++t) rem[static_cast<std::size_t>(i - dd + t)] -= c * d.coeffs()[static_cast<std::size_t>(t)];
  }
  return {Polynomial<Rational>(std::move(quot)).trimmed(), Polynomial<Rational>(std::move(rem)).trimmed()};
}

Polynomial<Rational> gcd(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
  Polynomial<Rational> x = a.trimmed();
  Polynomial<Rational> y = b.trimmed();
  while (!y.is_zero()) {
    Polynomial<Rational> r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  const int d = x.degree();
  if (d < 0) return x;
  const Rational lead = x.coeffs()[static_cast<std::size_t>(d)];
  return x * Rational(1 / lead);
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
  int hi = static_cast<int>(coeffs.size()) - 1;
  while (hi >= 0 && coeffs[static_cast<std::size_t>(hi)] == 0.0) --hi;
  if (hi < 0) throw DomainError("roots of the zero polynomial are undefined");
  int lo = 0;
  while (coeffs[static_cast<std::size_t>(lo)] == 0.0) ++lo;

  std::vector<std::complex<double>> roots(static_cast<std::size_t>(lo), {0.0, 0.0});
  const int degree = hi - lo;
  if (degree == 0) return roots;

  const double lead = coeffs[static_cast<std::size_t>(hi)];
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  companion.diagonal(-1).setOnes();
  for (int i = 0; i < degree; ++i) {
    companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(lo + i)] / lead;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw DomainError("companion eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) roots.push_back(ev[i]);
  return roots;
}

std::vector<double> chebyshev_t_to_power(const std::vector<double>& c) {
  const std::size_t n = c.size();
  std::vector<double> out(n, 0.0);
  // T_{k+1} = 2x T_k - T_{k-1}, tracked in the power basis.
  std::vector<double> prev(n, 0.0), cur(n, 0.0);
  prev[0] = 1.0;
  if (n > 0) out[0] += c[0];
  if (n > 1) {
    cur[1] = 1.0;
    out[1] += c[1];
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::vector<double> next(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < n; ++i) next[i] -= prev[i];
    for (std::size_t i = 0; i < n; ++i) out[i] += c[k + 1] * next[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

}  // namespace hermipade
