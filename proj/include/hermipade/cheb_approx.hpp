#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermipade/hermite_pade.hpp"
#include "hermipade/series.hpp"
#include "hermipade/trig_jacobi.hpp"

namespace hermipade {

// Nonlinear Hermite-Chebyshev approximant. Q is a chebyshev_T polynomial of
// degree <= m; P_j are chebyshev_T (first kind) or chebyshev_U (second kind)
// polynomials with indices <= n_j.
template <typename T>
struct ChebApproximant {
  TruncatedSeries<T> Q;
  std::vector<TruncatedSeries<T>> P;
  ApproximantKind kind = ApproximantKind::first;
};

// cos(l arccos x) = T_l(x): cosine coefficients carry over unchanged.
template <typename T>
ChebApproximant<T> cheb_first_kind(const TrigApproximant<T>& t);

// Denominator as in the first kind. sin(l arccos x) / sqrt(1 - x^2) = U_l(x),
// so sine coefficients of the numerators become U coefficients unchanged and
// the 1/sqrt(1 - x^2) factor never appears numerically.
template <typename T>
ChebApproximant<T> cheb_second_kind(const TrigApproximant<T>& t);

// Throws PoleOnSegment when a T-basis polynomial has a zero on [-1, 1]
// (real-root isolation plus a sign scan on a uniform grid). Returns the
// smallest sampled value.
template <typename T>
double require_positive_on_segment(const TruncatedSeries<T>& q, std::size_t scan_points = 1000);

// Chebyshev coefficients of f_j - P_j/Q from samples on Lobatto grids
// (type-I DCT for T, sin-weighted DST for U), doubled from `grid` until the
// low coefficients settle. Indices <= n+m must stay below
// tol * max|input coefficient|.
template <typename T>
ResidualReport cheb_residual_order(const SeriesSystem<T>& f_ch, const ChebApproximant<T>& c, const MultiIndex& idx,
                                   int grid = 257, int guard = kDefaultGuard, double tol = 1e-10);

// Exact check through the product rules T_a T_b and T_a U_b: with the
// candidate residual R_j = f_j - P_j/Q taken from the algebraic source,
// Q * R_j must equal Q * f_j - P_j coefficient by coefficient.
template <typename T>
ResidualReport cheb_residual_exact(const SeriesSystem<T>& f_ch, const ChebApproximant<T>& c, const MultiIndex& idx,
                                   const AlgebraicApproximant<T>& source, int guard = kDefaultGuard,
                                   double tol = 1e-10);

enum class ConditionStatus { passed, failed, not_checked };

struct ConditionCheck {
  ConditionStatus status = ConditionStatus::not_checked;
  std::string detail;
};

// Conditions 1) Hermite-Jacobi approximants exist, 2) radii > 1,
// 3) no poles in the closed unit disk.
struct ConditionReport {
  ConditionCheck jacobi;
  ConditionCheck radius;
  ConditionCheck poles;
  std::optional<std::string> hint;

  bool all_passed() const {
    return jacobi.status == ConditionStatus::passed && radius.status == ConditionStatus::passed &&
           poles.status == ConditionStatus::passed;
  }
};

enum class PipelineStatus { ok, condition_failed, degenerate };

struct PipelineOptions {
  int guard = kDefaultGuard;
  double pole_tol = 1e-9;
  bool cancel_common_factors = false;
  int grid = 257;
  double tol = 1e-10;
  bool sampled_cross_check = true;
};

template <typename T>
struct PipelineResult {
  ApproximantKind kind = ApproximantKind::first;
  MultiIndex idx;
  PipelineStatus status = PipelineStatus::ok;
  JacobiResult<T> jacobi;
  ConditionReport conditions;
  std::optional<RadiusCheck> radius;
  std::optional<PoleCertificate> poles;
  std::optional<ResidualReport> algebraic_residual;
  std::optional<TrigApproximant<T>> trig;
  std::optional<ChebApproximant<T>> cheb;
  std::optional<ResidualReport> trig_residual;
  std::optional<ResidualReport> cheb_residual;
  std::optional<ResidualReport> sampled_residual;
  // Degree of gcd(Q, P_j) per function (exact mode only).
  std::vector<int> common_factor_degree;
};

// Chebyshev series -> associated power/trigonometric systems -> existence and
// conditions -> trigonometric approximant -> Chebyshev approximant -> residual
// verification. T input takes the first-kind path, U input the second-kind
// path. A failed condition stops the chain and returns a partial result.
template <typename T>
PipelineResult<T> full_pipeline(const SeriesSystem<T>& input, const MultiIndex& idx, const AnalyticityInfo& radii,
                                const PipelineOptions& options = {});

std::string_view status_name(ConditionStatus s);
std::string_view status_name(PipelineStatus s);

}  // namespace hermipade
