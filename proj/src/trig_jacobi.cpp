#include "hermipade/trig_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hermipade/dct.hpp"
#include "hermipade/errors.hpp"
#include "residual_util.hpp"

namespace hermipade {

std::string_view kind_name(ApproximantKind kind) { return kind == ApproximantKind::first ? "first" : "second"; }

namespace {

PoleCertificate certify(std::vector<std::complex<double>> roots, double tol) {
  PoleCertificate cert;
  cert.min_modulus = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) {
    const double mod = std::abs(r);
    cert.min_modulus = std::min(cert.min_modulus, mod);
    if (mod <= 1.0 + tol) {
      cert.inside.push_back(r);
      cert.max_modulus_inside = std::max(cert.max_modulus_inside, mod);
    }
  }
  cert.roots = std::move(roots);
  cert.pass = cert.inside.empty();
  return cert;
}

template <typename T>
std::vector<double> doubles(const std::vector<T>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

template <typename T>
TruncatedSeries<T> denominator_trig(const Polynomial<T>& Q, std::size_t m) {
  std::vector<T> q(m + 1, T(0));
  const auto& c = Q.coeffs();
  for (std::size_t s = 0; s < c.size(); ++s) {
    for (std::size_t l = 0; l < c.size(); ++l) {
      const std::size_t d = l > s ? l - s : s - l;
      if (d > m) throw UpperTableError("denominator degree exceeds m");
      q[d] += c[s] * c[l];
    }
  }
  return TruncatedSeries<T>(Basis::cosine, std::move(q));
}

template <typename T>
TrigApproximant<T> build_trig(const AlgebraicApproximant<T>& approx, const MultiIndex& idx, ApproximantKind kind) {
  require_upper(idx);
  if (approx.P.size() != idx.k()) throw LengthError("approximant and multi-index disagree on k");
  const std::size_t m = static_cast<std::size_t>(idx.order());
  if (approx.Q.degree() > static_cast<int>(m)) throw UpperTableError("deg Q exceeds m");
  const auto& q = approx.Q.coeffs();

  TrigApproximant<T> t{denominator_trig(approx.Q, m), {}, kind};
  for (std::size_t j = 0; j < idx.k(); ++j) {
    const std::size_t nj = static_cast<std::size_t>(idx.numerator_degree(j));
    if (approx.P[j].degree() > static_cast<int>(nj)) throw UpperTableError("deg P_j exceeds n_j");
    const auto& p = approx.P[j].coeffs();
    std::vector<T> out(nj + 1, T(0));
    for (std::size_t l = 0; l < p.size(); ++l) {
      if (p[l] == T(0)) continue;
      for (std::size_t s = 0; s < q.size(); ++s) {
        const T w = p[l] * q[s];
        if (kind == ApproximantKind::first) {
          out[l > s ? l - s : s - l] += w;  // cos is even
        } else if (l > s) {
          out[l - s] += w;
        } else if (s > l) {
          out[s - l] -= w;  // sin is odd
        }
      }
    }
    t.P.emplace_back(kind == ApproximantKind::first ? Basis::cosine : Basis::sine, std::move(out));
  }
  return t;
}

void require_trig_system(Basis basis, ApproximantKind kind) {
  const Basis want = kind == ApproximantKind::first ? Basis::cosine : Basis::sine;
  if (basis != want) {
    throw KindMismatch(std::string(kind_name(kind)) + "-kind approximant needs a " + std::string(basis_name(want)) +
                       " system, got " + std::string(basis_name(basis)));
  }
}

}  // namespace

template <typename T>
PoleCertificate check_poles(const Polynomial<T>& Q, double tol) {
  if (Q.is_zero()) throw DomainError("check_poles: zero polynomial");
  return certify(polynomial_roots(doubles(Q.coeffs())), tol);
}

template <typename T>
PoleCertificate check_poles_reduced(const AlgebraicApproximant<T>& approx, double tol) {
  if constexpr (!ScalarTraits<T>::exact) {
    return check_poles(approx.Q, tol);
  } else {
    if (approx.Q.is_zero()) throw DomainError("check_poles: zero polynomial");
    std::vector<std::complex<double>> roots;
    for (const auto& p : approx.P) {
      const auto reduced = divide(approx.Q, gcd(approx.Q, p)).quotient;
      if (reduced.degree() < 1) continue;
      for (const auto& r : polynomial_roots(doubles(reduced.coeffs()))) roots.push_back(r);
    }
    auto cert = certify(std::move(roots), tol);
    cert.reduced = true;
    return cert;
  }
}

template <typename T>
double estimate_radius(const TruncatedSeries<T>& f) {
  const std::size_t L = f.size();
  double worst = 0.0;
  for (std::size_t l = std::max<std::size_t>(1, L / 2); l < L; ++l) {
    const double a = std::fabs(to_double(f.effective(l)));
    if (a == 0.0) continue;
    worst = std::max(worst, std::pow(a, 1.0 / static_cast<double>(l)));
  }
  return worst == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / worst;
}

template <typename T>
RadiusCheck check_radius(const SeriesSystem<T>& system, const AnalyticityInfo& info) {
  if (info.declared_radius.size() != system.k()) {
    throw LengthError("declared radii count does not match the number of series");
  }
  RadiusCheck out;
  std::ostringstream notes;
  for (std::size_t j = 0; j < system.k(); ++j) {
    const double declared = info.declared_radius[j];
    const double estimate = estimate_radius(system[j]);
    out.estimated.push_back(estimate);
    if (!(declared > 1.0)) {
      out.pass = false;
      notes << "f_" << j + 1 << ": declared radius " << to_string(declared)
            << " is not > 1 (condition 2 fails); move on to the rescaled system f_j(r z) with 0 < r < "
            << to_string(declared) << ". ";
    }
    if ((estimate > 1.0) != (declared > 1.0)) {
      notes << "f_" << j + 1 << ": warning, root-test estimate " << to_string(estimate)
            << " disagrees with the declared radius " << to_string(declared) << ". ";
    }
  }
  out.notes = notes.str();
  if (!out.notes.empty() && out.notes.back() == ' ') out.notes.pop_back();
  return out;
}

template <typename T>
TrigApproximant<T> trig_first_kind(const AlgebraicApproximant<T>& approx, const MultiIndex& idx) {
  return build_trig(approx, idx, ApproximantKind::first);
}

template <typename T>
TrigApproximant<T> trig_second_kind(const AlgebraicApproximant<T>& approx, const MultiIndex& idx) {
  return build_trig(approx, idx, ApproximantKind::second);
}

template <typename T>
ResidualReport trig_residual_order(const SeriesSystem<T>& f_t, const TrigApproximant<T>& t, const MultiIndex& idx,
                                   int grid, int guard, double tol) {
  require_trig_system(f_t.basis(), t.kind);
  if (f_t.k() != t.P.size()) throw LengthError("system and approximant disagree on k");
  const std::size_t L = f_t.min_length();
  const std::size_t contract = static_cast<std::size_t>(idx.n + idx.order());
  if (L <= contract) throw LengthError("trigonometric residual needs more than n+m coefficients");
  const std::size_t last = std::min(contract + static_cast<std::size_t>(guard), L - 1);
  const bool odd = t.kind == ApproximantKind::second;

  const auto Q = to_double(t.Q);
  ResidualReport report;
  report.basis = odd ? Basis::sine : Basis::cosine;
  report.method = ResidualMethod::sampled;
  report.contract_index = contract;
  std::ostringstream note;
  for (std::size_t j = 0; j < f_t.k(); ++j) {
    const auto f = to_double(f_t[j]);
    const auto P = to_double(t.P[j]);
    const double scale = detail::reference_scale(f.coeffs());
    auto transform = [&](std::size_t N) {
      std::vector<double> g(N, 0.0);
      for (std::size_t k = 0; k < N; ++k) {
        const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(N - 1);
        const double q = evaluate(Q, theta);
        if (!(q > 0.0)) throw DomainError("trigonometric denominator vanishes at x = " + to_string(theta));
        g[k] = evaluate(f, theta) - evaluate(P, theta) / q;
      }
      return odd ? oracle::dst_sine_coeffs(g) : oracle::dct_cheb_coeffs(g);
    };
    const auto conv = detail::converge(transform, std::max<std::size_t>(static_cast<std::size_t>(grid), 2 * L),
                                       last, 1e-2 * tol * scale);
    note << "f_" << j + 1 << ": " << conv.nodes << " nodes" << (conv.converged ? "" : " (not settled)") << "; ";
    report.functions.push_back(
        detail::make_entry(conv.coeffs, contract, last, tol * scale, j, "sampled trigonometric residual"));
  }
  report.note = note.str();
  return report;
}

template <typename T>
ResidualReport trig_residual_exact(const SeriesSystem<T>& f_t, const TrigApproximant<T>& t, const MultiIndex& idx,
                                   const AlgebraicApproximant<T>& source, int guard, double tol) {
  require_trig_system(f_t.basis(), t.kind);
  if (f_t.k() != t.P.size() || source.P.size() != t.P.size()) {
    throw LengthError("system and approximants disagree on k");
  }
  const std::size_t L = f_t.min_length();
  const std::size_t m = static_cast<std::size_t>(idx.order());
  const std::size_t contract = static_cast<std::size_t>(idx.n) + m;
  if (L <= contract + m) throw LengthError("exact trigonometric residual needs more than n+2m coefficients");
  const std::size_t valid = L - m;  // harmonics [0, valid) are determined by the data
  const std::size_t last = std::min(contract + static_cast<std::size_t>(guard), L - 1);
  const bool odd = t.kind == ApproximantKind::second;
  const Basis basis = odd ? Basis::sine : Basis::cosine;

  ResidualReport report;
  report.basis = basis;
  report.method = ResidualMethod::exact_linearization;
  report.contract_index = contract;
  for (std::size_t j = 0; j < f_t.k(); ++j) {
    // Candidate residual from the associated power series.
    const TruncatedSeries<T> power(Basis::power, f_t[j].coeffs(), f_t[j].halved_constant());
    const auto ratio = series_divide(source.P[j].as_series(L), source.Q.as_series(L), L);
    auto r = subtract(power, ratio).coeffs();
    if (odd) r[0] = T(0);
    const TruncatedSeries<T> candidate(basis, r);

    const auto lhs = linearized_product(t.Q, candidate, valid);
    // P_t,j has degree n_j < valid, so the difference keeps length `valid`.
    const auto rhs = subtract(linearized_product(t.Q, f_t[j], valid), t.P[j]);
    const double scale = ScalarTraits<T>::exact ? 0.0
                                                : tol * std::max(1.0, detail::max_abs(f_t[j].coeffs())) *
                                                      std::max(1.0, detail::max_abs(t.Q.coeffs()));
    for (std::size_t h = 0; h < valid; ++h) {
      const T diff = lhs.coeffs()[h] - rhs.coeffs()[h];
      if (!ScalarTraits<T>::is_zero(diff, scale)) {
        throw ContractViolation("Q_t * (f_t - P_t/Q_t) identity fails for function " + std::to_string(j + 1) +
                                    " at harmonic " + std::to_string(h) + " (difference " + to_string(diff) + ")",
                                j, h);
      }
    }
    report.functions.push_back(detail::make_entry(r, contract, last,
                                                  ScalarTraits<T>::exact ? 0.0
                                                                         : tol * std::max(1.0, detail::max_abs(f_t[j].coeffs())),
                                                  j, "trigonometric residual"));
  }
  return report;
}

#define HERMIPADE_INSTANTIATE(T)                                                                                    \
  template PoleCertificate check_poles(const Polynomial<T>&, double);                                               \
  template PoleCertificate check_poles_reduced(const AlgebraicApproximant<T>&, double);                             \
  template double estimate_radius(const TruncatedSeries<T>&);                                                       \
  template RadiusCheck check_radius(const SeriesSystem<T>&, const AnalyticityInfo&);                                \
  template TrigApproximant<T> trig_first_kind(const AlgebraicApproximant<T>&, const MultiIndex&);                   \
  template TrigApproximant<T> trig_second_kind(const AlgebraicApproximant<T>&, const MultiIndex&);                  \
  template ResidualReport trig_residual_order(const SeriesSystem<T>&, const TrigApproximant<T>&, const MultiIndex&, \
                                              int, int, double);                                                    \
  template ResidualReport trig_residual_exact(const SeriesSystem<T>&, const TrigApproximant<T>&, const MultiIndex&, \
                                              const AlgebraicApproximant<T>&, int, double);

HERMIPADE_INSTANTIATE(Rational)
HERMIPADE_INSTANTIATE(double)

#undef HERMIPADE_INSTANTIATE

}  // namespace hermipade
