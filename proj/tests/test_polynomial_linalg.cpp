#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "hermipade/errors.hpp"
#include "hermipade/linalg.hpp"
#include "hermipade/polynomial.hpp"
#include "support.hpp"

using namespace hermipade;
using namespace hermipade::testing;

namespace {

template <typename T>
Matrix<T> matrix(std::size_t r, std::size_t c, const std::vector<T>& v) {
  Matrix<T> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
  }
  return m;
}

}  // namespace

TEST(Polynomial, ArithmeticAndDegree) {
  const auto a = poly({"1", "1"});
  const auto b = poly({"1", "-1"});
  EXPECT_EQ(a * b, poly({"1", "0", "-1"}));
  EXPECT_EQ((a + b), poly({"2"}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(poly({"0", "0", "3", "0"}).degree(), 2);
  EXPECT_EQ(poly({"0", "0", "3"}).valuation(), 2);
  EXPECT_EQ(poly({"0", "0", "3"}).shift_down(2), poly({"3"}));
  EXPECT_DOUBLE_EQ(poly({"1", "2", "1"})(1.0), 4.0);
  const auto z = poly({"1", "-1/2"})(std::complex<double>(0.0, 2.0));
  EXPECT_DOUBLE_EQ(z.real(), 1.0);
  EXPECT_DOUBLE_EQ(z.imag(), -1.0);
}

TEST(Polynomial, TruncateUsesHalvedConstant) {
  const TruncatedSeries<Rational> s(Basis::power, qs({"4", "1", "1"}), true);
  EXPECT_EQ(Polynomial<Rational>::truncate(s, 1), poly({"2", "1"}));
}

TEST(Polynomial, DivisionAndGcd) {
  const auto num = poly({"-1", "0", "1"});  // z^2 - 1
  const auto den = poly({"1", "1"});
  const auto d = divide(num, den);
  EXPECT_EQ(d.quotient, poly({"-1", "1"}));
  EXPECT_TRUE(d.remainder.is_zero());
  EXPECT_EQ(gcd(poly({"-1", "0", "1"}), poly({"2", "2"})), poly({"1", "1"}));
  EXPECT_EQ(gcd(poly({"1", "1"}), poly({"1", "-1"})), poly({"1"}));
  EXPECT_THROW(divide(num, Polynomial<Rational>()), DivisionByNonUnit);
}

TEST(PolynomialRoots, CompanionEigenvalues) {
  auto roots = polynomial_roots({1.0, -2.0});
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].real(), 0.5, 1e-14);

  roots = polynomial_roots({1.0, 0.0, 1.0});
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) EXPECT_NEAR(std::abs(r), 1.0, 1e-14);

  // (z - 1)(z - 2)(z - 3) with trailing zero coefficients: z^2 * that.
  roots = polynomial_roots({0.0, 0.0, -6.0, 11.0, -6.0, 1.0, 0.0});
  ASSERT_EQ(roots.size(), 5u);
  std::vector<double> re;
  for (const auto& r : roots) re.push_back(r.real());
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], 0.0, 1e-12);
  EXPECT_NEAR(re[1], 0.0, 1e-12);
  EXPECT_NEAR(re[2], 1.0, 1e-10);
  EXPECT_NEAR(re[3], 2.0, 1e-10);
  EXPECT_NEAR(re[4], 3.0, 1e-10);

  EXPECT_TRUE(polynomial_roots({5.0}).empty());
  EXPECT_THROW(polynomial_roots({0.0, 0.0}), DomainError);
}

TEST(ChebyshevToPower, KnownExpansions) {
  // T_3 = 4x^3 - 3x
  const auto p = chebyshev_t_to_power({0.0, 0.0, 0.0, 1.0});
  ASSERT_GE(p.size(), 4u);
  EXPECT_DOUBLE_EQ(p[1], -3.0);
  EXPECT_DOUBLE_EQ(p[3], 4.0);
  // 5/4 - T_1
  const auto q = chebyshev_t_to_power({1.25, -1.0});
  EXPECT_DOUBLE_EQ(q[0], 1.25);
  EXPECT_DOUBLE_EQ(q[1], -1.0);
}

TEST(Determinant, ExactAndFloating) {
  EXPECT_EQ(determinant(matrix<Rational>(1, 1, qs({"1"}))), Rational(1));
  EXPECT_EQ(determinant(matrix<Rational>(2, 2, qs({"1", "1/2", "1", "1"}))), Rational(1, 2));
  EXPECT_EQ(determinant(matrix<Rational>(2, 2, qs({"0", "1", "1", "0"}))), Rational(-1));
  EXPECT_EQ(determinant(matrix<Rational>(2, 2, qs({"0", "0", "1", "2"}))), Rational(0));
  EXPECT_EQ(determinant(Matrix<Rational>(0, 0)), Rational(1));
  EXPECT_NEAR(determinant(matrix<double>(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2})), 6.0, 1e-13);
  // Hilbert 3x3: det = 1/2160
  EXPECT_EQ(determinant(matrix<Rational>(3, 3, qs({"1", "1/2", "1/3", "1/2", "1/3", "1/4", "1/3", "1/4", "1/5"}))),
            Rational(1, 2160));
}

TEST(Nullspace, RrefBasis) {
  const auto ns = nullspace(matrix<Rational>(1, 2, qs({"1", "1/2"})));
  EXPECT_EQ(ns.rank, 1u);
  ASSERT_EQ(ns.basis.size(), 1u);
  EXPECT_EQ(ns.free_columns, std::vector<std::size_t>{1});
  EXPECT_EQ(ns.basis[0], qs({"-1/2", "1"}));

  const auto full = nullspace(matrix<Rational>(2, 2, qs({"1", "2", "3", "4"})));
  EXPECT_TRUE(full.basis.empty());

  const auto two = nullspace(matrix<Rational>(1, 3, qs({"0", "1", "0"})));
  ASSERT_EQ(two.basis.size(), 2u);
  EXPECT_EQ(two.basis[0], qs({"1", "0", "0"}));
  EXPECT_EQ(two.basis[1], qs({"0", "0", "1"}));

  const auto fl = nullspace(matrix<double>(1, 2, {1.0, 0.5}));
  ASSERT_EQ(fl.basis.size(), 1u);
  EXPECT_NEAR(fl.basis[0][0], -0.5, 1e-15);
}

TEST(Matrix, WithoutColumn) {
  const auto m = matrix<Rational>(2, 3, qs({"1", "2", "3", "4", "5", "6"}));
  EXPECT_EQ(m.without_column(1), matrix<Rational>(2, 2, qs({"1", "3", "4", "6"})));
}
