#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hermipade/hermite_pade.hpp"
#include "hermipade/polynomial.hpp"
#include "hermipade/series.hpp"

namespace hermipade {

enum class ApproximantKind { first, second };

std::string_view kind_name(ApproximantKind kind);

// Q_t is a cosine polynomial (degree <= m); P_t,j are cosine polynomials for
// the first kind and sine polynomials for the second kind (degree <= n_j).
template <typename T>
struct TrigApproximant {
  TruncatedSeries<T> Q;
  std::vector<TruncatedSeries<T>> P;
  ApproximantKind kind = ApproximantKind::first;
};

struct PoleCertificate {
  std::vector<std::complex<double>> roots;   // every root examined
  std::vector<std::complex<double>> inside;  // |root| <= 1 + tol
  double max_modulus_inside = 0.0;
  double min_modulus = 0.0;                  // +inf when there are no roots
  bool pass = true;
  bool reduced = false;                      // common factors cancelled first
};

// Roots of Q inside the closed unit disk. Boundary roots fail.
template <typename T>
PoleCertificate check_poles(const Polynomial<T>& Q, double tol = 1e-9);

// Cancellation-aware variant: the poles of P_j/Q are the roots of
// Q / gcd(Q, P_j). Exact mode only; floating mode falls back to check_poles.
template <typename T>
PoleCertificate check_poles_reduced(const AlgebraicApproximant<T>& approx, double tol = 1e-9);

struct RadiusCheck {
  bool pass = true;
  std::vector<double> estimated;  // root-test estimates, advisory
  std::string notes;
};

// 1 / max_{l in [L/2, L)} |f_l|^{1/l}; +inf when the tail vanishes.
template <typename T>
double estimate_radius(const TruncatedSeries<T>& f);

// pass iff every declared radius exceeds 1. The root-test estimate is
// reported and only produces a warning when it disagrees.
template <typename T>
RadiusCheck check_radius(const SeriesSystem<T>& system, const AnalyticityInfo& info);

// Q_t = |Q(e^{ix})|^2 and P_t,j = Re{P_j(e^{ix}) conj Q(e^{ix})}, collected
// from sum_l sum_s p_l q_s cos((l - s) x).
template <typename T>
TrigApproximant<T> trig_first_kind(const AlgebraicApproximant<T>& approx, const MultiIndex& idx);

// Q_t as above; P_t,j = Im{P_j(e^{ix}) conj Q(e^{ix})} = sum_l sum_s p_l q_s sin((l - s) x).
template <typename T>
TrigApproximant<T> trig_second_kind(const AlgebraicApproximant<T>& approx, const MultiIndex& idx);

// Harmonics of the divided residual f_t,j - P_t,j / Q_t, extracted by sampling
// on 2^p + 1 nodes (starting from `grid`, doubled until the low harmonics
// settle). Harmonics <= n+m must stay below tol * max|input coefficient|.
template <typename T>
ResidualReport trig_residual_order(const SeriesSystem<T>& f_t, const TrigApproximant<T>& t, const MultiIndex& idx,
                                   int grid = 257, int guard = kDefaultGuard, double tol = 1e-10);

// Exact coefficient-space check of the divided residual. The candidate
// residual R_j = f_j - P_j/Q comes from the algebraic source; the check is
// that Q_t * R_j == Q_t * f_t,j - P_t,j harmonic by harmonic (product-to-sum,
// no rounding in exact mode) over every harmonic the truncated data
// determines. Mismatches and nonzero low harmonics raise ContractViolation.
template <typename T>
ResidualReport trig_residual_exact(const SeriesSystem<T>& f_t, const TrigApproximant<T>& t, const MultiIndex& idx,
                                   const AlgebraicApproximant<T>& source, int guard = kDefaultGuard,
                                   double tol = 1e-10);

}  // namespace hermipade
