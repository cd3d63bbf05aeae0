#include "hermipade/cheb_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hermipade/dct.hpp"
#include "hermipade/errors.hpp"
#include "residual_util.hpp"

namespace hermipade {

std::string_view status_name(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::passed: return "passed";
    case ConditionStatus::failed: return "failed";
    case ConditionStatus::not_checked: break;
  }
  return "not_checked";
}

std::string_view status_name(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::ok: return "ok";
    case PipelineStatus::condition_failed: return "condition_failed";
    case PipelineStatus::degenerate: break;
  }
  return "degenerate";
}

namespace {

// Power-basis coefficients of sum c_l T_l(x) (or U_l with U_0 = 0, U_1 = 1).
template <typename T>
Polynomial<T> chebyshev_to_power(const TruncatedSeries<T>& s) {
  const bool u = s.basis() == Basis::chebyshev_U;
  const auto c = s.effective_coeffs();
  std::vector<T> out(c.size(), T(0));
  // b0, b1: power coefficients of the basis polynomials of index l and l+1.
  std::vector<T> b0{u ? T(0) : T(1)};
  std::vector<T> b1 = u ? std::vector<T>{T(1)} : std::vector<T>{T(0), T(1)};
  for (std::size_t l = 0; l < c.size(); ++l) {
    for (std::size_t i = 0; i < b0.size() && i < out.size(); ++i) out[i] += c[l] * b0[i];
    std::vector<T> b2(b1.size() + 1, T(0));
    for (std::size_t i = 0; i < b1.size(); ++i) b2[i + 1] += T(2) * b1[i];
    for (std::size_t i = 0; i < b0.size(); ++i) b2[i] -= b0[i];
    b0 = std::move(b1);
    b1 = std::move(b2);
  }
  return Polynomial<T>(std::move(out));
}

void require_cheb_system(Basis basis, ApproximantKind kind) {
  const Basis want = kind == ApproximantKind::first ? Basis::chebyshev_T : Basis::chebyshev_U;
  if (basis != want) {
    throw KindMismatch(std::string(kind_name(kind)) + "-kind approximant needs a " + std::string(basis_name(want)) +
                       " system, got " + std::string(basis_name(basis)));
  }
}

template <typename T>
ChebApproximant<T> relabel(const TrigApproximant<T>& t, ApproximantKind kind) {
  if (t.kind != kind) {
    throw KindMismatch("expected a " + std::string(kind_name(kind)) + "-kind trigonometric approximant");
  }
  ChebApproximant<T> c{TruncatedSeries<T>(Basis::chebyshev_T, t.Q.coeffs()), {}, kind};
  const Basis pb = kind == ApproximantKind::first ? Basis::chebyshev_T : Basis::chebyshev_U;
  for (const auto& p : t.P) c.P.emplace_back(pb, p.coeffs());
  return c;
}

}  // namespace

template <typename T>
ChebApproximant<T> cheb_first_kind(const TrigApproximant<T>& t) {
  return relabel(t, ApproximantKind::first);
}

template <typename T>
ChebApproximant<T> cheb_second_kind(const TrigApproximant<T>& t) {
  return relabel(t, ApproximantKind::second);
}

template <typename T>
double require_positive_on_segment(const TruncatedSeries<T>& q, std::size_t scan_points) {
  if (q.basis() != Basis::chebyshev_T) throw BasisError("positivity check expects a chebyshev_T polynomial");
  const auto qd = to_double(q);
  const auto power = chebyshev_t_to_power(qd.effective_coeffs());
  if (std::all_of(power.begin(), power.end(), [](double v) { return v == 0.0; })) {
    throw PoleOnSegment("denominator is identically zero");
  }
  for (const auto& r : polynomial_roots(power)) {
    if (std::fabs(r.imag()) <= 1e-7 && std::fabs(r.real()) <= 1.0 + 1e-9) {
      throw PoleOnSegment("denominator has a real root at x = " + to_string(r.real()));
    }
  }
  double lowest = std::numeric_limits<double>::infinity();
  const std::size_t n = std::max<std::size_t>(scan_points, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    lowest = std::min(lowest, evaluate(qd, x));
  }
  if (!(lowest > 0.0)) throw PoleOnSegment("denominator is not positive on [-1, 1] (min " + to_string(lowest) + ")");
  return lowest;
}

template <typename T>
ResidualReport cheb_residual_order(const SeriesSystem<T>& f_ch, const ChebApproximant<T>& c, const MultiIndex& idx,
                                   int grid, int guard, double tol) {
  require_cheb_system(f_ch.basis(), c.kind);
  if (f_ch.k() != c.P.size()) throw LengthError("system and approximant disagree on k");
  require_positive_on_segment(c.Q);
  const std::size_t L = f_ch.min_length();
  const std::size_t contract = static_cast<std::size_t>(idx.n + idx.order());
  if (L <= contract) throw LengthError("Chebyshev residual needs more than n+m coefficients");
  const std::size_t last = std::min(contract + static_cast<std::size_t>(guard), L - 1);
  const bool u = c.kind == ApproximantKind::second;

  const auto Q = to_double(c.Q);
  ResidualReport report;
  report.basis = u ? Basis::chebyshev_U : Basis::chebyshev_T;
  report.method = ResidualMethod::sampled;
  report.contract_index = contract;
  std::ostringstream note;
  for (std::size_t j = 0; j < f_ch.k(); ++j) {
    const auto f = to_double(f_ch[j]);
    const auto P = to_double(c.P[j]);
    const double scale = detail::reference_scale(f.coeffs());
    auto transform = [&](std::size_t N) {
      const auto x = oracle::lobatto_nodes(N);
      std::vector<double> g(N, 0.0);
      for (std::size_t k = 0; k < N; ++k) g[k] = evaluate(f, x[k]) - evaluate(P, x[k]) / evaluate(Q, x[k]);
      return u ? oracle::dct_cheb_u_coeffs(g) : oracle::dct_cheb_coeffs(g);
    };
    const auto conv = detail::converge(transform, std::max<std::size_t>(static_cast<std::size_t>(grid), 2 * L),
                                       last, 1e-2 * tol * scale);
    note << "f_" << j + 1 << ": " << conv.nodes << " nodes" << (conv.converged ? "" : " (not settled)") << "; ";
    report.functions.push_back(
        detail::make_entry(conv.coeffs, contract, last, tol * scale, j, "sampled Chebyshev residual"));
  }
  report.note = note.str();
  return report;
}

template <typename T>
ResidualReport cheb_residual_exact(const SeriesSystem<T>& f_ch, const ChebApproximant<T>& c, const MultiIndex& idx,
                                   const AlgebraicApproximant<T>& source, int guard, double tol) {
  require_cheb_system(f_ch.basis(), c.kind);
  if (f_ch.k() != c.P.size() || source.P.size() != c.P.size()) {
    throw LengthError("system and approximants disagree on k");
  }
  const std::size_t L = f_ch.min_length();
  const std::size_t m = static_cast<std::size_t>(idx.order());
  const std::size_t contract = static_cast<std::size_t>(idx.n) + m;
  if (L <= contract + m) throw LengthError("exact Chebyshev residual needs more than n+2m coefficients");
  const std::size_t valid = L - m;
  const std::size_t last = std::min(contract + static_cast<std::size_t>(guard), L - 1);
  const Basis basis = c.kind == ApproximantKind::second ? Basis::chebyshev_U : Basis::chebyshev_T;

  ResidualReport report;
  report.basis = basis;
  report.method = ResidualMethod::exact_linearization;
  report.contract_index = contract;
  for (std::size_t j = 0; j < f_ch.k(); ++j) {
    const TruncatedSeries<T> power(Basis::power, f_ch[j].coeffs(), f_ch[j].halved_constant());
    const auto ratio = series_divide(source.P[j].as_series(L), source.Q.as_series(L), L);
    auto r = subtract(power, ratio).coeffs();
    if (basis == Basis::chebyshev_U) r[0] = T(0);
    const TruncatedSeries<T> candidate(basis, r);

    const auto lhs = linearized_product(c.Q, candidate, valid);
    const auto rhs = subtract(linearized_product(c.Q, f_ch[j], valid), c.P[j]);
    const double fscale = detail::reference_scale(f_ch[j].coeffs());
    const double zero_tol = ScalarTraits<T>::exact ? 0.0 : tol * fscale * detail::reference_scale(c.Q.coeffs());
    for (std::size_t h = 0; h < valid; ++h) {
      const T diff = lhs.coeffs()[h] - rhs.coeffs()[h];
      if (!ScalarTraits<T>::is_zero(diff, zero_tol)) {
        throw ContractViolation("Q * (f - P/Q) identity fails for function " + std::to_string(j + 1) + " at index " +
                                    std::to_string(h) + " (difference " + to_string(diff) + ")",
                                j, h);
      }
    }
    report.functions.push_back(detail::make_entry(r, contract, last, ScalarTraits<T>::exact ? 0.0 : tol * fscale, j,
                                                  "Chebyshev residual"));
  }
  return report;
}

template <typename T>
PipelineResult<T> full_pipeline(const SeriesSystem<T>& input, const MultiIndex& idx, const AnalyticityInfo& radii,
                                const PipelineOptions& options) {
  if (!is_chebyshev(input.basis())) throw BasisError("full_pipeline expects a chebyshev_T or chebyshev_U system");
  if (idx.k() != input.k()) throw LengthError("m list length must equal the number of series");
  require_upper(idx);
  require_length(input, idx, options.guard);

  PipelineResult<T> out;
  out.idx = idx;
  out.kind = input.basis() == Basis::chebyshev_T ? ApproximantKind::first : ApproximantKind::second;

  std::vector<TruncatedSeries<T>> power;
  std::vector<TruncatedSeries<T>> trig;
  for (const auto& f : input) {
    auto a = associate_series(f);
    power.push_back(std::move(a.power));
    trig.push_back(std::move(a.trig));
  }
  const SeriesSystem<T> f_power(std::move(power));
  const SeriesSystem<T> f_trig(std::move(trig));

  auto& cond = out.conditions;
  out.jacobi = jacobi_exists(f_power, idx, options.guard);
  if (!out.jacobi.exists) {
    cond.jacobi = {ConditionStatus::failed, out.jacobi.certificate};
    out.status = PipelineStatus::degenerate;
    return out;
  }
  cond.jacobi = {ConditionStatus::passed, out.jacobi.certificate};
  const auto& approx = *out.jacobi.approx;

  out.radius = check_radius(f_power, radii);
  cond.radius = {out.radius->pass ? ConditionStatus::passed : ConditionStatus::failed, out.radius->notes};
  if (!out.radius->pass) {
    cond.hint = "rescale: move on to the system f_j(r z) with 0 < r < R_j";
    out.status = PipelineStatus::condition_failed;
    return out;
  }

  out.poles = options.cancel_common_factors ? check_poles_reduced(approx, options.pole_tol)
                                            : check_poles(approx.Q, options.pole_tol);
  if (!out.poles->pass) {
    std::ostringstream d;
    d << out.poles->inside.size() << " root(s) of Q in the closed unit disk, max modulus "
      << to_string(out.poles->max_modulus_inside);
    cond.poles = {ConditionStatus::failed, d.str()};
    out.status = PipelineStatus::condition_failed;
    return out;
  }
  cond.poles = {ConditionStatus::passed, "no root of Q in the closed unit disk"};

  out.algebraic_residual = residual_window(approx, f_power, idx, options.guard, options.tol);
  if (out.kind == ApproximantKind::first) {
    out.trig = trig_first_kind(approx, idx);
    out.cheb = cheb_first_kind(*out.trig);
  } else {
    out.trig = trig_second_kind(approx, idx);
    out.cheb = cheb_second_kind(*out.trig);
  }
  out.trig_residual = trig_residual_exact(f_trig, *out.trig, idx, approx, options.guard, options.tol);
  out.cheb_residual = cheb_residual_exact(input, *out.cheb, idx, approx, options.guard, options.tol);
  if (options.sampled_cross_check) {
    out.sampled_residual = cheb_residual_order(input, *out.cheb, idx, options.grid, options.guard, options.tol);
  }

  if constexpr (ScalarTraits<T>::exact) {
    const auto q = chebyshev_to_power(out.cheb->Q);
    for (const auto& p : out.cheb->P) out.common_factor_degree.push_back(gcd(q, chebyshev_to_power(p)).degree());
  }
  return out;
}

#define HERMIPADE_INSTANTIATE(T)                                                                                     \
  template ChebApproximant<T> cheb_first_kind(const TrigApproximant<T>&);                                            \
  template ChebApproximant<T> cheb_second_kind(const TrigApproximant<T>&);                                           \
  template double require_positive_on_segment(const TruncatedSeries<T>&, std::size_t);                               \
  template ResidualReport cheb_residual_order(const SeriesSystem<T>&, const ChebApproximant<T>&, const MultiIndex&,  \
                                              int, int, double);                                                     \
  template ResidualReport cheb_residual_exact(const SeriesSystem<T>&, const ChebApproximant<T>&, const MultiIndex&,  \
                                              const AlgebraicApproximant<T>&, int, double);                          \
  template PipelineResult<T> full_pipeline(const SeriesSystem<T>&, const MultiIndex&, const AnalyticityInfo&,        \
                                           const PipelineOptions&);

HERMIPADE_INSTANTIATE(Rational)
HERMIPADE_INSTANTIATE(double)

#undef HERMIPADE_INSTANTIATE

}  // namespace hermipade
