#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hermipade/dct.hpp"
#include "hermipade/errors.hpp"
#include "hermipade/hermite_pade.hpp"
#include "hermipade/oracle.hpp"
#include "support.hpp"

using namespace hermipade;
using namespace hermipade::testing;
namespace or_ = hermipade::oracle;

namespace {

Matrix<Rational> row_matrix(const std::vector<std::vector<Rational>>& rows) {
  Matrix<Rational> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<double> sample(std::size_t N, double (*f)(double)) {
  const auto x = or_::lobatto_nodes(N);
  std::vector<double> out;
  for (double v : x) out.push_back(f(v));
  return out;
}

}  // namespace

TEST(ExactNullspace, Examples) {
  const auto a = or_::exact_nullspace(row_matrix({qs({"1", "1"})}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], qs({"-1", "1"}));

  // x + y/2 = 0: proportional to (1, -2); the free column carries the positive entry.
  const auto b = or_::exact_nullspace(row_matrix({qs({"1", "1/2"})}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], qs({"-1", "2"}));

  EXPECT_TRUE(or_::exact_nullspace(row_matrix({qs({"1", "2"}), qs({"3", "4"})})).empty());

  const auto c = or_::exact_nullspace(row_matrix({qs({"2/3", "4/3", "2"}), qs({"1", "2", "3"})}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], qs({"-2", "1", "0"}));
  EXPECT_EQ(c[1], qs({"-3", "0", "1"}));
}

TEST(ExactNullspace, InSpan) {
  const std::vector<std::vector<Rational>> basis{qs({"-2", "1", "0"}), qs({"-3", "0", "1"})};
  EXPECT_TRUE(or_::in_span(basis, qs({"-5", "1", "1"})));
  EXPECT_TRUE(or_::in_span(basis, qs({"0", "0", "0"})));
  EXPECT_FALSE(or_::in_span(basis, qs({"1", "1", "1"})));
  EXPECT_FALSE(or_::in_span({}, qs({"1", "0", "0"})));
}

TEST(BruteResidual, Examples) {
  // (1 - z) * sum z^l - 1 telescopes to zero.
  const TruncatedSeries<Rational> geo(Basis::power, geometric_coeffs(10));
  for (const auto& c : or_::brute_residual(poly({"1", "-1"}), poly({"1"}), geo, 10)) EXPECT_EQ(c, 0);

  const TruncatedSeries<Rational> e(Basis::power, exp_coeffs(12));
  const auto r = or_::brute_residual(poly({"1", "-1/2"}), poly({"1", "1/2"}), e, 12);
  EXPECT_EQ(r[0], 0);
  EXPECT_EQ(r[1], 0);
  EXPECT_EQ(r[2], 0);
  EXPECT_EQ(r[3], Rational(-1, 12));
  EXPECT_EQ(r[4], Rational(-1, 24));  // 1/24 - (1/2)(1/6)
  EXPECT_EQ(r.size(), 12u);

  // Past the stored length the series counts as zero.
  const TruncatedSeries<Rational> short_f(Basis::power, qs({"1", "1"}));
  const auto s = or_::brute_residual(poly({"1"}), poly({"1", "1"}), short_f, 5);
  for (const auto& c : s) EXPECT_EQ(c, 0);
}

TEST(Compare, ReportsFirstMismatch) {
  const auto same = or_::compare_exact(qs({"1", "2"}), qs({"1", "2"}), "copy");
  EXPECT_TRUE(same.agreement);
  EXPECT_FALSE(same.mismatch_index.has_value());
  const auto diff = or_::compare_exact(qs({"1", "2", "3"}), qs({"1", "5", "3"}), "copy");
  EXPECT_FALSE(diff.agreement);
  EXPECT_EQ(diff.mismatch_index, 1u);
  EXPECT_EQ(diff.method, "copy");

  const auto fl = or_::compare_float({1.0, 2.0}, {1.0, 2.0 + 1e-9}, 1e-12, "sampled");
  EXPECT_FALSE(fl.agreement);
  EXPECT_NEAR(fl.discrepancy, 1e-9, 1e-15);
  EXPECT_TRUE(or_::compare_float({1.0}, {1.0 + 1e-14}, 1e-12, "sampled").agreement);
}

TEST(Dct, Examples) {
  const auto x = or_::dct_cheb_coeffs(sample(17, [](double v) { return v; }));
  ASSERT_EQ(x.size(), 17u);
  for (std::size_t l = 0; l < x.size(); ++l) EXPECT_NEAR(x[l], l == 1 ? 1.0 : 0.0, 1e-15);

  const auto q = or_::dct_cheb_coeffs(sample(17, [](double v) { return 1.25 - v; }));
  EXPECT_NEAR(q[0], 1.25, 1e-15);
  EXPECT_NEAR(q[1], -1.0, 1e-15);

  const auto t5 = or_::dct_cheb_coeffs(sample(33, [](double v) { return std::cos(5 * std::acos(v)); }));
  for (std::size_t l = 0; l < t5.size(); ++l) EXPECT_NEAR(t5[l], l == 5 ? 1.0 : 0.0, 1e-14);

  // U_3 = sin 3t / sin t = 4x^2 - 1
  const auto u3 = or_::dct_cheb_u_coeffs(sample(33, [](double v) { return 4 * v * v - 1; }));
  for (std::size_t l = 0; l < u3.size(); ++l) EXPECT_NEAR(u3[l], l == 3 ? 1.0 : 0.0, 1e-14);

  std::vector<double> s(17);
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = std::sin(2 * std::numbers::pi * k / 16.0);
  const auto b = or_::dst_sine_coeffs(s);
  for (std::size_t l = 0; l < b.size(); ++l) EXPECT_NEAR(b[l], l == 2 ? 1.0 : 0.0, 1e-15);
}

TEST(Dct, RoundTripBelowHalfGrid) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (std::size_t N : {9u, 33u, 129u}) {
    std::vector<double> c((N - 1) / 2);
    for (auto& v : c) v = coef(rng);
    const TruncatedSeries<double> s(Basis::chebyshev_T, c);
    std::vector<double> samples;
    for (double x : or_::lobatto_nodes(N)) samples.push_back(evaluate(s, x));
    const auto back = or_::dct_cheb_coeffs(samples);
    for (std::size_t l = 0; l < N; ++l) EXPECT_NEAR(back[l], l < c.size() ? c[l] : 0.0, 1e-12);
  }
}

TEST(Dct, RejectsBadGrids) {
  EXPECT_THROW(or_::dct_cheb_coeffs(std::vector<double>(10, 1.0)), Error);
  EXPECT_THROW(or_::dct_cheb_coeffs(std::vector<double>{1.0, NAN, 1.0}), Error);
}

TEST(OracleProperty, NullspaceSolutionLiesInExactNullspace) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = or_::random_case(rng);
    const auto M = constraint_matrix(c.system, c.idx);
    const auto basis = or_::exact_nullspace(M);
    ASSERT_FALSE(basis.empty()) << c.idx.to_string();
    const auto a = solve_nullspace(c.system, c.idx);
    std::vector<Rational> q(static_cast<std::size_t>(c.idx.order()) + 1);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = a.Q[i];
    EXPECT_TRUE(or_::in_span(basis, q)) << "trial " << trial << " " << c.idx.to_string();
    EXPECT_EQ(a.nullity, basis.size()) << "trial " << trial;
  }
}

TEST(OracleProperty, BruteResidualMatchesWindow) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = or_::random_case(rng);
    const auto a = solve_nullspace(c.system, c.idx);
    const auto report = residual_window(a, c.system, c.idx);
    const std::size_t L = c.system.min_length();
    for (std::size_t j = 0; j < c.system.k(); ++j) {
      const auto brute = or_::brute_residual(a.Q, a.P[j], c.system[j], L);
      const std::size_t contract = static_cast<std::size_t>(c.idx.n + c.idx.order());
      for (std::size_t i = 0; i <= contract; ++i) EXPECT_EQ(brute[i], 0) << "trial " << trial;
      const auto& e = report.functions[j];
      for (std::size_t w = 0; w < e.window.size(); ++w) {
        EXPECT_EQ(to_string(brute[e.window_start + w]), e.window[w]) << "trial " << trial;
      }
    }
  }
}

TEST(RandomCase, RespectsOptions) {
  std::mt19937_64 rng(3);
  or_::RandomSystemOptions opts;
  opts.upper_only = true;
  opts.decay = true;
  opts.basis = Basis::chebyshev_U;
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = or_::random_case(rng, opts);
    EXPECT_TRUE(c.idx.is_upper());
    EXPECT_EQ(c.system.basis(), Basis::chebyshev_U);
    EXPECT_GE(c.system.min_length(), required_length(c.idx));
    for (const auto& f : c.system) EXPECT_EQ(f[0], 0);
    for (double r : c.radii) EXPECT_EQ(r, 2.0);
  }
}
