#include "hermipade/dct.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "hermipade/errors.hpp"

namespace hermipade::oracle {
namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void require_grid(std::span<const double> samples) {
  const std::size_t N = samples.size();
  if (N < 3 || ((N - 1) & (N - 2)) != 0) {
    throw DomainError("Chebyshev grid size must be 2^p + 1 with p >= 1, got " + std::to_string(N));
  }
  for (double v : samples) {
    if (!std::isfinite(v)) throw DomainError("non-finite sample passed to the DCT oracle");
  }
}

std::vector<double> r2r(std::vector<double> in, fftw_r2r_kind kind) {
  const int n = static_cast<int>(in.size());
  std::vector<double> out(in.size(), 0.0);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_r2r_1d(n, in.data(), out.data(), kind, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<double> lobatto_nodes(std::size_t N) {
  std::vector<double> x(N);
  for (std::size_t k = 0; k < N; ++k) {
    x[k] = std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(N - 1));
  }
  return x;
}

std::vector<double> dct_cheb_coeffs(std::span<const double> samples) {
  require_grid(samples);
  const std::size_t N = samples.size();
  const double intervals = static_cast<double>(N - 1);
  // REDFT00: Y_k = X_0 + (-1)^k X_{N-1} + 2 sum_{j=1}^{N-2} X_j cos(pi j k / (N-1))
  auto y = r2r(std::vector<double>(samples.begin(), samples.end()), FFTW_REDFT00);
  for (std::size_t k = 0; k < N; ++k) y[k] /= intervals;
  y.front() /= 2.0;
  y.back() /= 2.0;
  return y;
}

std::vector<double> dst_sine_coeffs(std::span<const double> samples) {
  require_grid(samples);
  const std::size_t N = samples.size();
  // RODFT00 over the interior: Y_k = 2 sum_j X_j sin(pi (j+1)(k+1) / (N-1))
  auto y = r2r(std::vector<double>(samples.begin() + 1, samples.end() - 1), FFTW_RODFT00);
  std::vector<double> out(N, 0.0);
  for (std::size_t k = 0; k + 2 < N; ++k) out[k + 1] = y[k] / static_cast<double>(N - 1);
  return out;
}

std::vector<double> dct_cheb_u_coeffs(std::span<const double> samples) {
  require_grid(samples);
  const std::size_t N = samples.size();
  std::vector<double> weighted(N, 0.0);
  for (std::size_t k = 1; k + 1 < N; ++k) {
    weighted[k] = samples[k] * std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(N - 1));
  }
  return dst_sine_coeffs(weighted);
}

}  // namespace hermipade::oracle
