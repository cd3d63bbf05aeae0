#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "hermipade/errors.hpp"
#include "hermipade/hermite_pade.hpp"
#include "hermipade/trig_jacobi.hpp"
#include "support.hpp"

using namespace hermipade;
using namespace hermipade::testing;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

AlgebraicApproximant<Rational> approx_of(Polynomial<Rational> Q, std::vector<Polynomial<Rational>> P) {
  AlgebraicApproximant<Rational> a;
  a.Q = std::move(Q);
  a.P = std::move(P);
  return a;
}

// Sum_{l>=1} (z/2)^l, i.e. (z/2) / (1 - z/2).
std::vector<Rational> half_geometric(std::size_t L) { return geometric_coeffs(L, Rational(1, 2), true); }

std::complex<double> eval_on_circle(const Polynomial<Rational>& p, double x) {
  return p(std::complex<double>(std::cos(x), std::sin(x)));
}

// exp(a z)
std::vector<Rational> scaled_exp(std::size_t L, const Rational& a) {
  auto c = exp_coeffs(L);
  Rational p = 1;
  for (auto& x : c) {
    x *= p;
    p *= a;
  }
  return c;
}

}  // namespace

TEST(CheckPoles, Examples) {
  const auto ok = check_poles(poly({"1", "-1/2"}));
  EXPECT_TRUE(ok.pass);
  ASSERT_EQ(ok.roots.size(), 1u);
  EXPECT_NEAR(ok.roots[0].real(), 2.0, 1e-12);
  EXPECT_TRUE(ok.inside.empty());
  EXPECT_NEAR(ok.min_modulus, 2.0, 1e-12);

  const auto inside = check_poles(poly({"1", "-2"}));
  EXPECT_FALSE(inside.pass);
  ASSERT_EQ(inside.inside.size(), 1u);
  EXPECT_NEAR(inside.max_modulus_inside, 0.5, 1e-12);

  // Roots +-i sit on the boundary, which fails.
  EXPECT_FALSE(check_poles(poly({"1", "0", "1"})).pass);

  const auto constant = check_poles(poly({"3"}));
  EXPECT_TRUE(constant.pass);
  EXPECT_TRUE(std::isinf(constant.min_modulus));

  EXPECT_THROW(check_poles(Polynomial<Rational>()), DomainError);
  EXPECT_TRUE(check_poles(Polynomial<double>({1.0, -0.5})).pass);
}

TEST(CheckPoles, ReducedCancelsCommonFactors) {
  // P/Q = (1 - 2z)(1 + z) / ((1 - 2z)(1 - z/3)): the root 1/2 cancels.
  const auto Q = poly({"1", "-2"}) * poly({"1", "-1/3"});
  const auto P = poly({"1", "-2"}) * poly({"1", "1"});
  const auto a = approx_of(Q, {P});
  EXPECT_FALSE(check_poles(a.Q).pass);
  const auto reduced = check_poles_reduced(a);
  EXPECT_TRUE(reduced.pass);
  EXPECT_TRUE(reduced.reduced);
  ASSERT_EQ(reduced.roots.size(), 1u);
  EXPECT_NEAR(reduced.roots[0].real(), 3.0, 1e-12);
}

TEST(CheckRadius, Examples) {
  const auto exp_sys = system_of(Basis::power, {exp_coeffs(16)});
  const auto e = check_radius(exp_sys, AnalyticityInfo({kInf}));
  EXPECT_TRUE(e.pass);
  ASSERT_EQ(e.estimated.size(), 1u);
  EXPECT_GT(e.estimated[0], 3.0);

  const auto geo = system_of(Basis::power, {geometric_coeffs(16)});
  const auto g = check_radius(geo, AnalyticityInfo({1.0}));
  EXPECT_FALSE(g.pass);
  EXPECT_NE(g.notes.find("condition 2"), std::string::npos);
  EXPECT_NE(g.notes.find("f_j(r z)"), std::string::npos);

  const auto half = system_of(Basis::power, {geometric_coeffs(64, Rational(1, 2))});
  const auto h = check_radius(half, AnalyticityInfo({2.0}));
  EXPECT_TRUE(h.pass);
  EXPECT_NEAR(h.estimated[0], 2.0, 0.4);

  EXPECT_THROW(check_radius(half, AnalyticityInfo({2.0, 2.0})), LengthError);
}

TEST(CheckRadius, DisagreementIsOnlyAWarning) {
  const auto geo = system_of(Basis::power, {geometric_coeffs(16)});
  const auto r = check_radius(geo, AnalyticityInfo({3.0}));
  EXPECT_TRUE(r.pass);
  EXPECT_NE(r.notes.find("warning"), std::string::npos);
}

TEST(EstimateRadius, VanishingTailIsInfinite) {
  const TruncatedSeries<Rational> p(Basis::power, qs({"1", "2", "0", "0", "0", "0"}));
  EXPECT_TRUE(std::isinf(estimate_radius(p)));
}

TEST(TrigFirstKind, Examples) {
  const MultiIndex idx(1, {1});
  const auto t = trig_first_kind(approx_of(poly({"1", "-1/2"}), {poly({"1", "1/2"})}), idx);
  EXPECT_EQ(t.kind, ApproximantKind::first);
  EXPECT_EQ(t.Q.basis(), Basis::cosine);
  EXPECT_EQ(t.Q.coeffs(), qs({"5/4", "-1"}));
  ASSERT_EQ(t.P.size(), 1u);
  EXPECT_EQ(t.P[0].basis(), Basis::cosine);
  // Re{(1 + e^{ix}/2)(1 - e^{-ix}/2)} = 3/4 + 0 cos x
  EXPECT_EQ(t.P[0].coeffs(), qs({"3/4", "0"}));

  const auto one = trig_first_kind(approx_of(poly({"1"}), {poly({"1"})}), MultiIndex(1, {1}));
  EXPECT_EQ(one.Q.coeffs(), qs({"1", "0"}));
  EXPECT_EQ(one.P[0].coeffs(), qs({"1", "0"}));
}

TEST(TrigSecondKind, Examples) {
  const MultiIndex idx(1, {1});
  const auto t = trig_second_kind(approx_of(poly({"1", "-1/2"}), {poly({"0", "1/2"})}), idx);
  EXPECT_EQ(t.kind, ApproximantKind::second);
  EXPECT_EQ(t.Q.coeffs(), qs({"5/4", "-1"}));
  EXPECT_EQ(t.P[0].basis(), Basis::sine);
  EXPECT_EQ(t.P[0].coeffs(), qs({"0", "1/2"}));

  const auto zero = trig_second_kind(approx_of(poly({"1"}), {poly({"1"})}), MultiIndex(1, {1}));
  EXPECT_EQ(zero.P[0].coeffs(), qs({"0", "0"}));

  const auto sin_x = trig_second_kind(approx_of(poly({"1"}), {poly({"0", "1"})}), MultiIndex(1, {1}));
  EXPECT_EQ(sin_x.P[0].coeffs(), qs({"0", "1"}));
}

TEST(TrigApproximant, RejectsLowerTable) {
  const auto a = approx_of(poly({"1", "1", "1"}), {poly({"1"})});
  EXPECT_THROW(trig_first_kind(a, MultiIndex(0, {2})), UpperTableError);
  EXPECT_THROW(trig_second_kind(a, MultiIndex(1, {2})), UpperTableError);
}

TEST(TrigApproximant, PointwiseIdentities) {
  // Q_t = |Q(e^{ix})|^2 >= 0, P_t = Re / Im of P(e^{ix}) conj Q(e^{ix}).
  const auto Q = poly({"1", "-1/3", "1/7"});
  const auto P1 = poly({"2", "1/2", "-1", "3/5"});
  const auto P2 = poly({"-1", "0", "4"});
  const MultiIndex idx(2, {1, 1});
  const auto a = approx_of(Q, {P1, P2});
  const auto first = trig_first_kind(a, idx);
  const auto second = trig_second_kind(a, idx);
  for (int i = 0; i <= 200; ++i) {
    const double x = -std::numbers::pi + 2 * std::numbers::pi * i / 200.0;
    const auto q = eval_on_circle(Q, x);
    EXPECT_NEAR(evaluate(first.Q, x), std::norm(q), 1e-13);
    EXPECT_GE(evaluate(first.Q, x), 0.0);
    const std::vector<Polynomial<Rational>> Ps{P1, P2};
    for (std::size_t j = 0; j < 2; ++j) {
      const auto w = eval_on_circle(Ps[j], x) * std::conj(q);
      EXPECT_NEAR(evaluate(first.P[j], x), w.real(), 1e-12);
      EXPECT_NEAR(evaluate(second.P[j], x), w.imag(), 1e-12);
    }
  }
}

TEST(TrigResidual, ExactAndSampledForHalfGeometric) {
  const MultiIndex idx(1, {1});
  const auto power = system_of(Basis::power, {half_geometric(16)});
  const auto sine = system_of(Basis::sine, {half_geometric(16)});
  const auto a = solve_nullspace(power, idx);
  EXPECT_EQ(a.Q, poly({"1", "-1/2"}));
  EXPECT_EQ(a.P[0], poly({"0", "1/2"}));
  const auto t = trig_second_kind(a, idx);

  const auto exact = trig_residual_exact(sine, t, idx, a);
  EXPECT_TRUE(exact.contract_holds());
  EXPECT_EQ(exact.method, ResidualMethod::exact_linearization);
  EXPECT_EQ(exact.basis, Basis::sine);
  ASSERT_EQ(exact.functions.size(), 1u);
  EXPECT_FALSE(exact.functions[0].first_nonzero.has_value());
  for (const auto& s : exact.functions[0].window) EXPECT_EQ(s, "0");

  const auto sampled = trig_residual_order(sine, t, idx, 33);
  EXPECT_TRUE(sampled.contract_holds());
  EXPECT_EQ(sampled.method, ResidualMethod::sampled);
  for (double v : sampled.functions[0].window_values) EXPECT_LT(std::fabs(v), 1e-12);
}

TEST(TrigResidual, ExpFirstKind) {
  const MultiIndex idx(1, {1});
  const auto power = system_of(Basis::power, {exp_coeffs(16)});
  const auto cosine = system_of(Basis::cosine, {exp_coeffs(16)});
  const auto a = solve_nullspace(power, idx);
  const auto t = trig_first_kind(a, idx);
  const auto exact = trig_residual_exact(cosine, t, idx, a);
  EXPECT_TRUE(exact.contract_holds());
  // The divided residual of exp at (1,(1)) starts at z^3 with -1/12.
  EXPECT_EQ(exact.functions[0].first_nonzero, 3u);
  EXPECT_EQ(exact.functions[0].window.front(), "-1/12");

  const auto sampled = trig_residual_order(cosine, t, idx);
  EXPECT_TRUE(sampled.contract_holds());
  EXPECT_NEAR(sampled.functions[0].window_values.front(), -1.0 / 12.0, 1e-12);
  EXPECT_LT(sampled.functions[0].max_low, 1e-12);
}

TEST(TrigResidual, CorruptedNumeratorIsRejected) {
  const MultiIndex idx(1, {1});
  const auto power = system_of(Basis::power, {exp_coeffs(16)});
  const auto cosine = system_of(Basis::cosine, {exp_coeffs(16)});
  const auto a = solve_nullspace(power, idx);
  auto t = trig_first_kind(a, idx);
  auto p = t.P[0].coeffs();
  p[1] += Rational(1, 1000);
  t.P[0] = TruncatedSeries<Rational>(Basis::cosine, p);
  EXPECT_THROW(trig_residual_exact(cosine, t, idx, a), ContractViolation);
  EXPECT_THROW(trig_residual_order(cosine, t, idx), ContractViolation);
}

TEST(TrigResidual, KindMismatch) {
  const MultiIndex idx(1, {1});
  const auto power = system_of(Basis::power, {exp_coeffs(16)});
  const auto cosine = system_of(Basis::cosine, {exp_coeffs(16)});
  const auto a = solve_nullspace(power, idx);
  const auto t = trig_second_kind(a, idx);
  EXPECT_THROW(trig_residual_exact(cosine, t, idx, a), KindMismatch);
  EXPECT_THROW(trig_residual_order(cosine, t, idx), KindMismatch);
}

TEST(TrigResidual, FloatingModeAgrees) {
  const MultiIndex idx(2, {1, 1});
  const auto fs = std::vector<std::vector<Rational>>{exp_coeffs(20), scaled_exp(20, Rational(-1, 2))};
  const auto a = solve_nullspace(system_of<double>(Basis::power, fs), idx);
  const auto t = trig_first_kind(a, idx);
  const auto cosine = system_of<double>(Basis::cosine, fs);
  EXPECT_TRUE(check_poles(a.Q).pass);
  EXPECT_TRUE(trig_residual_exact(cosine, t, idx, a).contract_holds());
  const auto sampled = trig_residual_order(cosine, t, idx);
  EXPECT_LT(sampled.functions[0].max_low, 1e-10);
  EXPECT_LT(sampled.functions[1].max_low, 1e-10);
}
