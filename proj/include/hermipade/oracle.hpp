#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hermipade/linalg.hpp"
#include "hermipade/polynomial.hpp"
#include "hermipade/scalar.hpp"
#include "hermipade/series.hpp"

// Slow, independent routes used to cross-check the main implementation.
namespace hermipade::oracle {

template <typename V>
struct OracleResult {
  V value;
  std::string method;
  bool agreement = true;
  double discrepancy = 0.0;                    // floating comparisons
  std::optional<std::size_t> mismatch_index;   // exact comparisons
};

// Null space by fraction-free elimination over the integers (each row is
// scaled by the lcm of its denominators first). One vector per free column,
// with coprime integer entries and a positive entry at that column.
std::vector<std::vector<Rational>> exact_nullspace(const Matrix<Rational>& M);

// True when v is a linear combination of `basis` (exact rank test).
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

// All L coefficients of Q * f - P by direct convolution.
std::vector<Rational> brute_residual(const Polynomial<Rational>& Q, const Polynomial<Rational>& P,
                                     const TruncatedSeries<Rational>& f, std::size_t L);

// Exact coefficient comparison; the first differing index is reported.
OracleResult<std::vector<Rational>> compare_exact(std::vector<Rational> oracle, const std::vector<Rational>& primary,
                                                  std::string method);

// Floating comparison; discrepancy is the max absolute difference.
OracleResult<std::vector<double>> compare_float(std::vector<double> oracle, const std::vector<double>& primary,
                                                double tol, std::string method);

struct RandomSystemOptions {
  std::size_t k_max = 3;
  int n_max = 6;
  int m_max = 4;                // bound on the total order m
  int guard = 8;
  bool upper_only = false;      // require n >= max m_j
  bool decay = false;           // multiply coefficient l by (1/2)^l
  Basis basis = Basis::power;
  bool halved_constant = false; // power and chebyshev_T only
};

struct RandomCase {
  SeriesSystem<Rational> system;
  MultiIndex idx;
  std::vector<double> radii;    // declared: 2 with decay, +inf otherwise
};

// Coefficients uniform over {-5..5}/{1..5}; length n + 2m + guard.
// Sine and chebyshev_U systems get a zero constant term. With decay the
// case is redrawn while any root-test estimate is <= 1.
RandomCase random_case(std::mt19937_64& rng, const RandomSystemOptions& options = {});

}  // namespace hermipade::oracle
