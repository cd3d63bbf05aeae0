#pragma once

#include <span>
#include <vector>

namespace hermipade::oracle {

// Chebyshev-Lobatto nodes x_k = cos(pi k / (N - 1)), k = 0..N-1.
std::vector<double> lobatto_nodes(std::size_t N);

// T-coefficients of the degree N-1 interpolant through samples at the
// Lobatto nodes (type-I DCT). The constant term is returned as is, not halved.
// N must be 2^p + 1 and every sample finite.
std::vector<double> dct_cheb_coeffs(std::span<const double> samples);

// Second-kind variant. `samples` are values h(x_k) of sum_l c_l U_l(x) with
// U_l(cos t) = sin(l t) / sin t. The sin t weight is applied and a type-I DST
// over the interior nodes recovers c_1..c_{N-2}; index 0 and N-1 are zero.
// Endpoint samples are ignored.
std::vector<double> dct_cheb_u_coeffs(std::span<const double> samples);

// Sine coefficients b_l of an odd function sampled at t_k = pi k / (N - 1).
std::vector<double> dst_sine_coeffs(std::span<const double> samples);

}  // namespace hermipade::oracle
