#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hermipade/scalar.hpp"

namespace hermipade {

// Bases used for coefficient sequences.
//
// chebyshev_U follows the convention U_l(x) = sin(l arccos x) / sqrt(1 - x^2),
// so U_0 == 0 and U_1 == 1 (the textbook U_{l-1}). Sine and chebyshev_U
// sequences therefore keep a zero at index 0.
enum class Basis { power, cosine, sine, chebyshev_T, chebyshev_U };

std::string_view basis_name(Basis basis);
Basis parse_basis(std::string_view name);

inline bool is_chebyshev(Basis b) { return b == Basis::chebyshev_T || b == Basis::chebyshev_U; }
inline bool is_odd_kind(Basis b) { return b == Basis::sine || b == Basis::chebyshev_U; }

template <typename T>
class TruncatedSeries {
 public:
  // halved_constant marks the a_0/2 convention: the stored coefficient is a_0
  // and consumers use a_0/2. Only valid for power, cosine and chebyshev_T.
  TruncatedSeries(Basis basis, std::vector<T> coeffs, bool halved_constant = false);

  Basis basis() const { return basis_; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool halved_constant() const { return halved_constant_; }

  // Raw stored coefficient; zero beyond the stored length.
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  // Coefficient with the a_0/2 convention applied.
  T effective(std::size_t i) const;
  std::vector<T> effective_coeffs() const;

  // Index of the highest nonzero coefficient, or -1 for the zero sequence.
  int degree(double tol = 0.0) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Basis basis_;
  std::vector<T> coeffs_;
  bool halved_constant_;
};

template <typename T>
class SeriesSystem {
 public:
  explicit SeriesSystem(std::vector<TruncatedSeries<T>> functions);

  std::size_t k() const { return functions_.size(); }
  Basis basis() const { return functions_.front().basis(); }
  const TruncatedSeries<T>& operator[](std::size_t j) const { return functions_[j]; }
  const std::vector<TruncatedSeries<T>>& functions() const { return functions_; }
  std::size_t min_length() const;

  auto begin() const { return functions_.begin(); }
  auto end() const { return functions_.end(); }

 private:
  std::vector<TruncatedSeries<T>> functions_;
};

// The pair (n, m_vec). Order m = sum m_j, numerator degrees n_j = n + m - m_j.
struct MultiIndex {
  int n = 0;
  std::vector<int> m_vec;

  MultiIndex() = default;
  MultiIndex(int n_, std::vector<int> m);

  std::size_t k() const { return m_vec.size(); }
  int order() const;
  int numerator_degree(std::size_t j) const { return n + order() - m_vec[j]; }
  int max_m() const;
  // Upper part of the table: n >= max_j m_j.
  bool is_upper() const { return n >= max_m(); }

  std::string to_string() const;
};

inline constexpr int kDefaultGuard = 8;

// Minimum coefficient count n + 2m + guard required by every pipeline.
std::size_t required_length(const MultiIndex& idx, int guard = kDefaultGuard);

// Throws LengthError when any series is shorter than required_length().
template <typename T>
void require_length(const SeriesSystem<T>& system, const MultiIndex& idx, int guard = kDefaultGuard);

// Throws UpperTableError unless n >= max m_j.
void require_upper(const MultiIndex& idx);

struct AnalyticityInfo {
  std::vector<double> declared_radius;   // user supplied, may be +inf
  std::vector<double> estimated_radius;  // root-test heuristic, advisory

  explicit AnalyticityInfo(std::vector<double> declared);
};

// Cauchy product truncated to L coefficients. Both inputs power basis.
template <typename T>
TruncatedSeries<T> truncated_multiply(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b,
                                      std::size_t L);

// q with q * den == num to L terms. Requires den[0] != 0.
template <typename T>
TruncatedSeries<T> series_divide(const TruncatedSeries<T>& num, const TruncatedSeries<T>& den,
                                 std::size_t L);

template <typename T>
struct AssociatedSeries {
  TruncatedSeries<T> power;
  TruncatedSeries<T> trig;
};

// chebyshev_T -> (power, cosine); chebyshev_U -> (power, sine). Coefficients
// are copied verbatim and the halved-constant flag is carried along.
template <typename T>
AssociatedSeries<T> associate_series(const TruncatedSeries<T>& s);

// Point evaluation in double precision. For cosine and sine the argument is
// the angle; for Chebyshev bases it must lie in [-1, 1].
template <typename T>
double evaluate(const TruncatedSeries<T>& s, double x);

// Product of a cosine (resp. chebyshev_T) sequence with a cosine or sine
// (resp. chebyshev_T or chebyshev_U) sequence, linearized back into the
// second factor's basis:
//   cos a cos b = (cos(a+b) + cos(a-b)) / 2,   T_a T_b = (T_{a+b} + T_{|a-b|}) / 2
//   cos a sin b = (sin(b+a) + sin(b-a)) / 2,   T_a U_b = (U_{a+b} + sgn(b-a) U_{|b-a|}) / 2
// Only indices below L are kept. Halved constants are applied on input.
template <typename T>
TruncatedSeries<T> linearized_product(const TruncatedSeries<T>& even, const TruncatedSeries<T>& other,
                                      std::size_t L);

// Componentwise a - b in a shared basis, padded to the longer length.
template <typename T>
TruncatedSeries<T> subtract(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b);

template <typename T>
TruncatedSeries<double> to_double(const TruncatedSeries<T>& s);

template <typename T>
SeriesSystem<double> to_double(const SeriesSystem<T>& s);

}  // namespace hermipade
