#include "hermipade/hermite_pade.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hermipade/errors.hpp"

namespace hermipade {

std::string_view provenance_name(Provenance p) {
  return p == Provenance::nullspace ? "nullspace" : "determinant";
}

bool ResidualReport::contract_holds() const {
  for (const auto& f : functions) {
    if (f.first_nonzero && *f.first_nonzero <= contract_index) return false;
  }
  return true;
}

namespace {

template <typename T>
T coeff(const TruncatedSeries<T>& f, long p) {
  return p < 0 ? T(0) : f.effective(static_cast<std::size_t>(p));
}

template <typename T>
double max_magnitude(const std::vector<T>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, ScalarTraits<T>::magnitude(x));
  return m;
}

template <typename T>
void require_basic(const SeriesSystem<T>& system, const MultiIndex& idx) {
  if (system.basis() != Basis::power) throw BasisError("Hermite-Pade construction needs power series");
  if (system.k() != idx.k()) {
    throw LengthError("multi-index has " + std::to_string(idx.k()) + " components but the system has " +
                      std::to_string(system.k()) + " series");
  }
  const std::size_t need = static_cast<std::size_t>(idx.n + idx.order() + 1);
  if (system.min_length() < need) {
    throw LengthError("need at least n+m+1 = " + std::to_string(need) + " coefficients per series");
  }
}

template <typename T>
AlgebraicApproximant<T> from_denominator(std::vector<T> q, const SeriesSystem<T>& system, const MultiIndex& idx,
                                         Provenance provenance, double tol) {
  AlgebraicApproximant<T> a;
  a.Q = Polynomial<T>(std::move(q));
  a.P = numerators_for(a.Q, system, idx);
  a.provenance = provenance;
  normalize(a, tol);
  return a;
}

// Largest s with z^s dividing Q and every P_j; -1 when Q vanishes.
template <typename T>
int common_z_power(const AlgebraicApproximant<T>& approx, double scale) {
  int shift = approx.Q.valuation(scale);
  if (shift < 0) return shift;
  for (const auto& p : approx.P) {
    const int v = p.valuation(scale);
    if (v >= 0) shift = std::min(shift, v);
  }
  return shift;
}

}  // namespace

template <typename T>
HankelSystem<T> build_hankel(const SeriesSystem<T>& system, const MultiIndex& idx) {
  require_basic(system, idx);
  const long n = idx.n;
  const std::size_t m = static_cast<std::size_t>(idx.order());
  HankelSystem<T> h;
  h.square = Matrix<T>(m, m);
  h.extended = Matrix<T>(m, m + 1);
  std::size_t row = 0;
  for (std::size_t j = 0; j < system.k(); ++j) {
    const long mj = idx.m_vec[j];
    if (mj == 0) continue;
    Matrix<T> block(static_cast<std::size_t>(mj), m);
    for (long r = 0; r < mj; ++r, ++row) {
      for (std::size_t c = 0; c <= m; ++c) {
        const T v = coeff(system[j], n - mj + 1 + r + static_cast<long>(c));
        h.extended(row, c) = v;
        if (c < m) {
          block(static_cast<std::size_t>(r), c) = v;
          h.square(row, c) = v;
        }
      }
    }
    h.blocks.push_back(std::move(block));
    h.block_owner.push_back(j);
  }
  return h;
}

template <typename T>
DeterminantValue<T> hadamard_det(const HankelSystem<T>& h) {
  DeterminantValue<T> out;
  out.value = determinant(h.square);
  if constexpr (ScalarTraits<T>::exact) {
    out.is_zero = sgn(out.value) == 0;
  } else {
    double bound = 1.0;
    for (std::size_t r = 0; r < h.square.rows(); ++r) {
      double norm = 0.0;
      for (std::size_t c = 0; c < h.square.cols(); ++c) norm += h.square(r, c) * h.square(r, c);
      bound *= std::sqrt(norm);
    }
    out.is_zero = std::fabs(out.value) <= 1e-10 * bound;
    std::ostringstream os;
    os << "floating-point determinant " << out.value << " (Hadamard bound " << bound << ")";
    if (out.is_zero) os << " treated as zero; rerun in exact mode to confirm";
    out.warning = os.str();
  }
  return out;
}

template <typename T>
Matrix<T> constraint_matrix(const SeriesSystem<T>& system, const MultiIndex& idx) {
  require_basic(system, idx);
  const long m = idx.order();
  Matrix<T> a(static_cast<std::size_t>(m), static_cast<std::size_t>(m + 1));
  std::size_t row = 0;
  for (std::size_t j = 0; j < system.k(); ++j) {
    const long nj = idx.numerator_degree(j);
    for (long i = nj + 1; i <= idx.n + m; ++i, ++row) {
      for (long p = 0; p <= m; ++p) a(row, static_cast<std::size_t>(p)) = coeff(system[j], i - p);
    }
  }
  return a;
}

template <typename T>
void normalize(AlgebraicApproximant<T>& approx, double tol) {
  const auto& q = approx.Q.coeffs();
  const double scale = tol > 0.0 ? tol * std::max(1.0, max_magnitude(q)) : 0.0;
  const int v = approx.Q.valuation(scale);
  if (v < 0) throw DegenerateError("denominator is identically zero");
  Normalization<T> norm;
  norm.rule = v == 0 ? NormalizationRule::constant_term : NormalizationRule::lowest_order;
  norm.pivot_power = static_cast<std::size_t>(v);
  norm.divided_by = q[static_cast<std::size_t>(v)];
  const T inv = T(1) / norm.divided_by;
  approx.Q *= inv;
  for (auto& p : approx.P) p *= inv;
  approx.normalization = norm;
}

template <typename T>
std::vector<Polynomial<T>> numerators_for(const Polynomial<T>& Q, const SeriesSystem<T>& system,
                                          const MultiIndex& idx) {
  std::vector<Polynomial<T>> out;
  out.reserve(system.k());
  for (std::size_t j = 0; j < system.k(); ++j) {
    const int nj = idx.numerator_degree(j);
    const auto prod = truncated_multiply(Q.as_series(static_cast<std::size_t>(nj) + 1), system[j],
                                         static_cast<std::size_t>(nj) + 1);
    out.push_back(Polynomial<T>::truncate(prod, nj));
  }
  return out;
}

template <typename T>
std::vector<AlgebraicApproximant<T>> nullspace_candidates(const SeriesSystem<T>& system, const MultiIndex& idx,
                                                          double tol) {
  const auto ns = nullspace(constraint_matrix(system, idx), tol);
  std::vector<AlgebraicApproximant<T>> out;
  for (const auto& v : ns.basis) {
    auto a = from_denominator<T>(v, system, idx, Provenance::nullspace, tol);
    a.nullity = ns.basis.size();
    a.unique = ns.basis.size() == 1;
    out.push_back(std::move(a));
  }
  return out;
}

template <typename T>
AlgebraicApproximant<T> solve_nullspace(const SeriesSystem<T>& system, const MultiIndex& idx, int guard,
                                        double tol) {
  require_length(system, idx, guard);
  auto candidates = nullspace_candidates(system, idx, tol);
  // Basis vectors come in increasing free-column order, so the first has the
  // lowest degree in Q.
  return std::move(candidates.front());
}

template <typename T>
std::vector<T> extended_cofactors(const HankelSystem<T>& h) {
  const std::size_t m = h.extended.rows();
  std::vector<T> out(m + 1, T(0));
  for (std::size_t c = 0; c <= m; ++c) {
    T minor = determinant(h.extended.without_column(c));
    out[c] = ((m + c) % 2 == 0) ? minor : T(-minor);
  }
  return out;
}

template <typename T>
AlgebraicApproximant<T> qp_via_determinants(const SeriesSystem<T>& system, const MultiIndex& idx, double tol) {
  const auto h = build_hankel(system, idx);
  const auto cof = extended_cofactors(h);
  const std::size_t m = cof.size() - 1;
  const double scale = tol * std::max(1.0, max_magnitude(cof));
  if (std::all_of(cof.begin(), cof.end(), [&](const T& c) { return ScalarTraits<T>::is_zero(c, scale); })) {
    throw DegenerateError("all maximal minors of F vanish for " + idx.to_string());
  }

  // E(z) row: entry c is z^{m-c}.
  std::vector<T> q(m + 1, T(0));
  for (std::size_t c = 0; c <= m; ++c) q[m - c] = cof[c];

  // E_{m_j}(z) row: entry c is z^{m-c} * (f_j truncated to degree n - m_j + c).
  AlgebraicApproximant<T> a;
  a.Q = Polynomial<T>(std::move(q));
  for (std::size_t j = 0; j < system.k(); ++j) {
    Polynomial<T> g;
    for (std::size_t c = 0; c <= m; ++c) {
      const long top = idx.n - idx.m_vec[j] + static_cast<long>(c);
      if (top < 0 || cof[c] == T(0)) continue;
      std::vector<T> entry(m - c + static_cast<std::size_t>(top) + 1, T(0));
      for (long l = 0; l <= top; ++l) entry[m - c + static_cast<std::size_t>(l)] = system[j].effective(static_cast<std::size_t>(l));
      g += Polynomial<T>(std::move(entry)) * cof[c];
    }
    a.P.push_back(g.trimmed());
  }
  a.provenance = Provenance::determinant;
  a.unique = !ScalarTraits<T>::is_zero(cof[m], scale);
  a.nullity = 1;
  normalize(a, tol);
  return a;
}

template <typename T>
std::vector<std::vector<T>> determinant_residuals(const SeriesSystem<T>& system, const MultiIndex& idx, int guard) {
  const auto h = build_hankel(system, idx);
  const auto cof = extended_cofactors(h);
  const long m = idx.order();
  std::vector<std::vector<T>> out(system.k());
  for (std::size_t j = 0; j < system.k(); ++j) {
    for (long l = 1; l <= guard; ++l) {
      T d(0);
      for (long c = 0; c <= m; ++c) d += cof[static_cast<std::size_t>(c)] * coeff(system[j], idx.n + l + c);
      out[j].push_back(d);
    }
  }
  return out;
}

template <typename T>
ResidualReport residual_window(const AlgebraicApproximant<T>& approx, const SeriesSystem<T>& system,
                               const MultiIndex& idx, int guard, double tol) {
  require_basic(system, idx);
  const std::size_t L = system.min_length();
  const std::size_t contract = static_cast<std::size_t>(idx.n + idx.order());
  const std::size_t last = std::min(contract + static_cast<std::size_t>(guard), L - 1);

  ResidualReport report;
  report.basis = Basis::power;
  report.method = ResidualMethod::exact_coefficients;
  report.contract_index = contract;
  for (std::size_t j = 0; j < system.k(); ++j) {
    const auto qf = truncated_multiply(approx.Q.as_series(L), system[j], L);
    const auto r = subtract(qf, approx.P[j].as_series(L));
    double scale = 0.0;
    if constexpr (!ScalarTraits<T>::exact) {
      scale = tol * std::max(1.0, max_magnitude(approx.Q.coeffs()) * max_magnitude(system[j].coeffs()));
    }
    ResidualEntry e;
    e.window_start = contract + 1;
    for (std::size_t i = 0; i <= last; ++i) {
      const T& v = r.coeffs()[i];
      const bool zero = ScalarTraits<T>::is_zero(v, scale);
      if (i <= contract) {
        e.max_low = std::max(e.max_low, ScalarTraits<T>::magnitude(v));
        if (!zero) {
          throw ContractViolation("residual of function " + std::to_string(j + 1) + " has nonzero coefficient " +
                                      to_string(v) + " at index " + std::to_string(i) + " <= n+m = " +
                                      std::to_string(contract),
                                  j, i);
        }
        continue;
      }
      e.window.push_back(to_string(v));
      e.window_values.push_back(to_double(v));
      if (!zero && !e.first_nonzero) e.first_nonzero = i;
    }
    report.functions.push_back(std::move(e));
  }
  return report;
}

template <typename T>
std::optional<std::string> check_divided_contract(const AlgebraicApproximant<T>& approx,
                                                  const SeriesSystem<T>& system, const MultiIndex& idx,
                                                  double tol) {
  const std::size_t L = system.min_length();
  const std::size_t contract = static_cast<std::size_t>(idx.n + idx.order());
  if (L <= contract) return "not enough coefficients to check the contract";

  const double qscale = ScalarTraits<T>::exact ? 0.0 : tol * std::max(1.0, max_magnitude(approx.Q.coeffs()));
  const int shift = common_z_power(approx, qscale);
  if (shift < 0) return "denominator vanishes identically";
  const Polynomial<T> q = approx.Q.shift_down(static_cast<std::size_t>(shift));
  if (ScalarTraits<T>::is_zero(q[0], qscale)) {
    return "Q(0) = 0 and the factor z does not cancel against every numerator";
  }
  for (std::size_t j = 0; j < system.k(); ++j) {
    const auto pj = approx.P[j].shift_down(static_cast<std::size_t>(shift));
    const auto ratio = series_divide(pj.as_series(L), q.as_series(L), L);
    const auto r = subtract(system[j], ratio);
    const double fscale =
        ScalarTraits<T>::exact ? 0.0 : tol * std::max(1.0, max_magnitude(system[j].coeffs()));
    for (std::size_t i = 0; i <= contract; ++i) {
      if (!ScalarTraits<T>::is_zero(r.coeffs()[i], fscale)) {
        return "f_" + std::to_string(j + 1) + " - P/Q has coefficient " + to_string(r.coeffs()[i]) + " at z^" +
               std::to_string(i) + " (needs O(z^" + std::to_string(contract + 1) + "))";
      }
    }
  }
  return std::nullopt;
}

template <typename T>
JacobiResult<T> jacobi_exists(const SeriesSystem<T>& system, const MultiIndex& idx, int guard, double tol) {
  require_length(system, idx, guard);
  JacobiResult<T> out{false, std::nullopt, hadamard_det(build_hankel(system, idx)), 0, {}};
  std::ostringstream cert;
  if (!out.hadamard.is_zero) {
    auto a = solve_nullspace(system, idx, guard, tol);
    out.nullity = a.nullity;
    out.exists = true;
    cert << "H" << idx.to_string() << " = " << to_string(out.hadamard.value)
         << " != 0: Hermite-Jacobi approximants exist, are unique and coincide with the Hermite-Pade approximants";
    out.approx = std::move(a);
    out.certificate = cert.str();
    return out;
  }

  auto candidates = nullspace_candidates(system, idx, tol);
  out.nullity = candidates.empty() ? 0 : candidates.front().nullity;
  cert << "H" << idx.to_string() << " = 0; nullity " << out.nullity << ";";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto failure = check_divided_contract(candidates[i], system, idx, tol);
    if (!failure) {
      auto a = std::move(candidates[i]);
      const int shift = common_z_power(a, ScalarTraits<T>::exact ? 0.0 : tol);
      if (shift > 0) {
        a.Q = a.Q.shift_down(static_cast<std::size_t>(shift));
        for (auto& p : a.P) p = p.shift_down(static_cast<std::size_t>(shift));
        normalize(a, tol);
      }
      cert << " candidate " << i + 1 << " passes the direct check";
      out.exists = true;
      out.approx = std::move(a);
      out.certificate = cert.str();
      return out;
    }
    cert << " candidate " << i + 1 << ": " << *failure << ";";
  }
  cert << " determinant zero, no candidate passed (search limited to null-space basis vectors of the linear "
          "problem)";
  out.certificate = cert.str();
  return out;
}

#define HERMIPADE_INSTANTIATE(T)                                                                                      \
  template HankelSystem<T> build_hankel(const SeriesSystem<T>&, const MultiIndex&);                                   \
  template DeterminantValue<T> hadamard_det(const HankelSystem<T>&);                                                  \
  template Matrix<T> constraint_matrix(const SeriesSystem<T>&, const MultiIndex&);                                    \
  template void normalize(AlgebraicApproximant<T>&, double);                                                          \
  template std::vector<Polynomial<T>> numerators_for(const Polynomial<T>&, const SeriesSystem<T>&,                    \
                                                     const MultiIndex&);                                              \
  template AlgebraicApproximant<T> solve_nullspace(const SeriesSystem<T>&, const MultiIndex&, int, double);          \
  template std::vector<AlgebraicApproximant<T>> nullspace_candidates(const SeriesSystem<T>&, const MultiIndex&,       \
                                                                     double);                                         \
  template AlgebraicApproximant<T> qp_via_determinants(const SeriesSystem<T>&, const MultiIndex&, double);           \
  template std::vector<T> extended_cofactors(const HankelSystem<T>&);                                                 \
  template ResidualReport residual_window(const AlgebraicApproximant<T>&, const SeriesSystem<T>&, const MultiIndex&, \
                                          int, double);                                                               \
  template std::vector<std::vector<T>> determinant_residuals(const SeriesSystem<T>&, const MultiIndex&, int);        \
  template JacobiResult<T> jacobi_exists(const SeriesSystem<T>&, const MultiIndex&, int, double);                    \
  template std::optional<std::string> check_divided_contract(const AlgebraicApproximant<T>&, const SeriesSystem<T>&, \
                                                             const MultiIndex&, double);

HERMIPADE_INSTANTIATE(Rational)
HERMIPADE_INSTANTIATE(double)

#undef HERMIPADE_INSTANTIATE

}  // namespace hermipade
