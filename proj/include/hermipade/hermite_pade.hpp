#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hermipade/linalg.hpp"
#include "hermipade/polynomial.hpp"
#include "hermipade/series.hpp"

namespace hermipade {

// Block matrices for a multi-index (n, m_vec):
//   H^j (m_j x m):       entry (r, c) = f^j_{n - m_j + 1 + r + c}, f^j_p = 0 for p < 0
//   F^j (m_j x (m+1)):   H^j with the column f^j_{n_j+1 .. n+m} appended
// Blocks with m_j = 0 are omitted.
template <typename T>
struct HankelSystem {
  std::vector<Matrix<T>> blocks;        // H^j for m_j > 0, in function order
  std::vector<std::size_t> block_owner;  // function index of each block
  Matrix<T> square;                     // H_{n,m}
  Matrix<T> extended;                   // F_{n,m}
};

template <typename T>
HankelSystem<T> build_hankel(const SeriesSystem<T>& system, const MultiIndex& idx);

template <typename T>
struct DeterminantValue {
  T value;
  bool is_zero = false;
  std::optional<std::string> warning;  // floating mode only
};

// det H_{n,m}. Floating mode treats |det| <= 1e-10 * (product of row norms)
// as zero and attaches a warning recommending exact mode.
template <typename T>
DeterminantValue<T> hadamard_det(const HankelSystem<T>& h);

enum class Provenance { nullspace, determinant };

enum class NormalizationRule { constant_term, lowest_order };

template <typename T>
struct Normalization {
  NormalizationRule rule = NormalizationRule::constant_term;
  std::size_t pivot_power = 0;  // power whose coefficient was scaled to 1
  T divided_by = T(1);          // raw Q coefficient at pivot_power
};

// Common denominator Q (deg <= m) and numerators P_j (deg <= n_j).
template <typename T>
struct AlgebraicApproximant {
  Polynomial<T> Q;
  std::vector<Polynomial<T>> P;
  Provenance provenance = Provenance::nullspace;
  Normalization<T> normalization;
  bool unique = true;
  std::size_t nullity = 1;
};

// The homogeneous system for q_0..q_m: for every j with m_j > 0 and every
// i in [n_j + 1, n + m], sum_p q_p f^j_{i-p} = 0.
template <typename T>
Matrix<T> constraint_matrix(const SeriesSystem<T>& system, const MultiIndex& idx);

// Q(0) = 1 when Q(0) != 0, otherwise the lowest-order nonzero coefficient
// is scaled to 1. The same factor is applied to every P_j.
template <typename T>
void normalize(AlgebraicApproximant<T>& approx, double tol = 0.0);

// P_j := Q * f_j truncated to degree n_j.
template <typename T>
std::vector<Polynomial<T>> numerators_for(const Polynomial<T>& Q, const SeriesSystem<T>& system,
                                          const MultiIndex& idx);

// Hermite-Pade approximant from the null space of constraint_matrix(). When
// the null space has dimension > 1 the solution of lowest degree in Q is
// returned and `unique` is false.
template <typename T>
AlgebraicApproximant<T> solve_nullspace(const SeriesSystem<T>& system, const MultiIndex& idx,
                                        int guard = kDefaultGuard, double tol = kDefaultTolerance);

// Every basis vector of the null space, each turned into a normalized
// approximant. Used by the degenerate branch of jacobi_exists.
template <typename T>
std::vector<AlgebraicApproximant<T>> nullspace_candidates(const SeriesSystem<T>& system, const MultiIndex& idx,
                                                          double tol = kDefaultTolerance);

// Determinant representation: Laplace expansion of det[F; E(z)] and
// det[F; E_{m_j}(z)] along the appended row. The coefficient of z^{m-c} in Q
// is the signed maximal minor of F with column c removed.
template <typename T>
AlgebraicApproximant<T> qp_via_determinants(const SeriesSystem<T>& system, const MultiIndex& idx,
                                            double tol = kDefaultTolerance);

// The m+1 signed maximal minors (cofactors along the appended row) of F.
template <typename T>
std::vector<T> extended_cofactors(const HankelSystem<T>& h);

struct ResidualEntry {
  std::vector<std::string> window;  // exact strings (exact mode) or decimals
  std::vector<double> window_values;
  std::size_t window_start = 0;     // index of window[0]
  std::optional<std::size_t> first_nonzero;
  double max_low = 0.0;             // largest |coefficient| at indices <= n+m
};

enum class ResidualMethod { exact_coefficients, exact_linearization, sampled };

// Residual coefficients per function in a given basis. Indices <= n+m must
// vanish; the window covers (n+m, n+m+G] as far as the data is exact.
struct ResidualReport {
  Basis basis = Basis::power;
  ResidualMethod method = ResidualMethod::exact_coefficients;
  std::size_t contract_index = 0;  // n + m
  std::vector<ResidualEntry> functions;
  std::optional<std::string> note;

  // True when no function has a nonzero coefficient at index <= n+m.
  bool contract_holds() const;
};

// Coefficients of Q*f_j - P_j. Throws ContractViolation if any coefficient at
// index <= n+m is nonzero (exact) or exceeds tol (floating).
template <typename T>
ResidualReport residual_window(const AlgebraicApproximant<T>& approx, const SeriesSystem<T>& system,
                               const MultiIndex& idx, int guard = kDefaultGuard, double tol = 1e-10);

// d^j_{n,m,l}: determinant of F with (f^j_{n+l}, ..., f^j_{n+m+l}) appended,
// for l = 1..G. Unnormalized (the scale of the determinant representation).
template <typename T>
std::vector<std::vector<T>> determinant_residuals(const SeriesSystem<T>& system, const MultiIndex& idx, int guard);

template <typename T>
struct JacobiResult {
  bool exists = false;
  std::optional<AlgebraicApproximant<T>> approx;
  DeterminantValue<T> hadamard;
  std::size_t nullity = 0;
  std::string certificate;
};

// Existence of Hermite-Jacobi approximants. A nonzero H_{n,m} settles it
// directly. Otherwise each null-space candidate is checked against
// f_j - P_j/Q = O(z^{n+m+1}) after cancelling a common power of z.
template <typename T>
JacobiResult<T> jacobi_exists(const SeriesSystem<T>& system, const MultiIndex& idx, int guard = kDefaultGuard,
                              double tol = kDefaultTolerance);

// Direct check of the divided-form contract for one candidate. Returns the
// reason it fails, or nullopt when it passes.
template <typename T>
std::optional<std::string> check_divided_contract(const AlgebraicApproximant<T>& approx,
                                                  const SeriesSystem<T>& system, const MultiIndex& idx,
                                                  double tol = 1e-10);

std::string_view provenance_name(Provenance p);

}  // namespace hermipade
