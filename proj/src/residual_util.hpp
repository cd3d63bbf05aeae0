#pragma once

// Internal helpers shared by the trigonometric and Chebyshev residual checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "hermipade/errors.hpp"
#include "hermipade/hermite_pade.hpp"

namespace hermipade::detail {

// Builds one ResidualEntry from coefficients r[0..last]. Any coefficient at
// index <= contract that is not zero (within zero_tol in floating mode)
// raises ContractViolation.
template <typename T>
ResidualEntry make_entry(const std::vector<T>& r, std::size_t contract, std::size_t last, double zero_tol,
                         std::size_t j, const std::string& what) {
  ResidualEntry e;
  e.window_start = contract + 1;
  for (std::size_t i = 0; i <= last && i < r.size(); ++i) {
    const bool zero = ScalarTraits<T>::is_zero(r[i], zero_tol);
    if (i <= contract) {
      e.max_low = std::max(e.max_low, ScalarTraits<T>::magnitude(r[i]));
      if (!zero) {
        throw ContractViolation(what + " of function " + std::to_string(j + 1) + " has coefficient " +
                                    to_string(r[i]) + " at index " + std::to_string(i) + " <= n+m = " +
                                    std::to_string(contract),
                                j, i);
      }
      continue;
    }
    e.window.push_back(to_string(r[i]));
    e.window_values.push_back(to_double(r[i]));
    if (!zero && !e.first_nonzero) e.first_nonzero = i;
  }
  return e;
}

template <typename T>
double max_abs(const std::vector<T>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, ScalarTraits<T>::magnitude(x));
  return m;
}

// Largest |coefficient|, or 1 for the zero sequence.
template <typename T>
double reference_scale(const std::vector<T>& v) {
  const double m = max_abs(v);
  return m > 0.0 ? m : 1.0;
}

inline std::size_t next_grid(std::size_t at_least) {
  std::size_t n = 2;
  while (n + 1 < at_least) n *= 2;
  return n + 1;
}

inline constexpr std::size_t kMaxGrid = (std::size_t{1} << 20) + 1;

struct ConvergedCoefficients {
  std::vector<double> coeffs;
  std::size_t nodes = 0;
  double last_change = 0.0;
  bool converged = false;
};

// Refines the sampling grid (N -> 2N - 1) until coefficients 0..watch move
// by no more than settle between two grids, or the grid cap is reached.
inline ConvergedCoefficients converge(const std::function<std::vector<double>(std::size_t)>& transform,
                                      std::size_t start, std::size_t watch, double settle) {
  ConvergedCoefficients out;
  std::size_t N = next_grid(start);
  out.coeffs = transform(N);
  out.nodes = N;
  while (N < kMaxGrid) {
    const std::size_t N2 = 2 * N - 1;
    auto next = transform(N2);
    double change = 0.0;
    for (std::size_t i = 0; i <= watch && i < out.coeffs.size(); ++i) {
      change = std::max(change, std::fabs(next[i] - out.coeffs[i]));
    }
    out.coeffs = std::move(next);
    out.nodes = N2;
    out.last_change = change;
    N = N2;
    if (change <= settle) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace hermipade::detail
