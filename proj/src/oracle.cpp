#include "hermipade/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hermipade/errors.hpp"
#include "hermipade/trig_jacobi.hpp"

namespace hermipade::oracle {
namespace {

using Integer = mpz_class;

void remove_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) g = ::gcd(g, x);
  if (g > 1) {
    for (auto& x : row) x /= g;
  }
}

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<Rational>> exact_nullspace(const Matrix<Rational>& M) {
  const std::size_t rows = M.rows();
  const std::size_t cols = M.cols();
  if (cols == 0) throw DomainError("exact_nullspace: matrix has no columns");

  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < cols; ++c) scale = lcm(scale, M(r, c).get_den());
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = M(r, c).get_num() * (scale / M(r, c).get_den());
    }
  }

  // Integer row echelon form: row_i := pivot * row_i - a_ic * row_pivot.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Integer f = a[r][c];
      const Integer g = a[rank][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = g * a[r][k] - f * a[rank][k];
      remove_content(a[r]);
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = rank; i-- > 0;) {
      const std::size_t pc = pivot_col[i];
      Rational s = 0;
      for (std::size_t k = pc + 1; k < cols; ++k) s += Rational(a[i][k]) * x[k];
      x[pc] = -s / Rational(a[i][pc]);
    }
    Integer den = 1;
    for (const auto& v : x) den = lcm(den, v.get_den());
    std::vector<Integer> ints;
    ints.reserve(cols);
    for (const auto& v : x) ints.push_back(v.get_num() * (den / v.get_den()));
    remove_content(ints);
    std::vector<Rational> out;
    out.reserve(cols);
    for (const auto& v : ints) out.emplace_back(v);
    basis.push_back(std::move(out));
  }
  return basis;
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
  auto rows = basis;
  const std::size_t before = exact_rank(rows);
  rows.push_back(v);
  return exact_rank(std::move(rows)) == before;
}

std::vector<Rational> brute_residual(const Polynomial<Rational>& Q, const Polynomial<Rational>& P,
                                     const TruncatedSeries<Rational>& f, std::size_t L) {
  std::vector<Rational> out(L, Rational(0));
  for (std::size_t i = 0; i < L; ++i) {
    Rational s = 0;
    for (std::size_t p = 0; p <= i; ++p) s += Q[p] * f.effective(i - p);
    out[i] = s - P[i];
  }
  return out;
}

OracleResult<std::vector<Rational>> compare_exact(std::vector<Rational> oracle, const std::vector<Rational>& primary,
                                                  std::string method) {
  OracleResult<std::vector<Rational>> r;
  r.value = std::move(oracle);
  r.method = std::move(method);
  const std::size_t n = std::max(r.value.size(), primary.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Rational a = i < r.value.size() ? r.value[i] : Rational(0);
    const Rational b = i < primary.size() ? primary[i] : Rational(0);
    if (a != b) {
      r.agreement = false;
      r.mismatch_index = i;
      r.discrepancy = std::fabs(Rational(a - b).get_d());
      break;
    }
  }
  return r;
}

OracleResult<std::vector<double>> compare_float(std::vector<double> oracle, const std::vector<double>& primary,
                                                double tol, std::string method) {
  OracleResult<std::vector<double>> r;
  r.value = std::move(oracle);
  r.method = std::move(method);
  const std::size_t n = std::max(r.value.size(), primary.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < r.value.size() ? r.value[i] : 0.0;
    const double b = i < primary.size() ? primary[i] : 0.0;
    const double d = std::fabs(a - b);
    if (d > r.discrepancy || std::isnan(d)) {
      r.discrepancy = std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
      r.mismatch_index = i;
    }
  }
  r.agreement = r.discrepancy <= tol;
  if (r.agreement) r.mismatch_index.reset();
  return r;
}

RandomCase random_case(std::mt19937_64& rng, const RandomSystemOptions& options) {
  if (options.k_max < 1 || options.m_max < 1 || options.n_max < 0) {
    throw DomainError("random_case: bounds must allow at least one system");
  }
  std::uniform_int_distribution<std::size_t> k_dist(1, options.k_max);
  std::uniform_int_distribution<int> m_dist(0, options.m_max);
  std::uniform_int_distribution<long> num_dist(-5, 5);
  std::uniform_int_distribution<long> den_dist(1, 5);
  const bool odd = is_odd_kind(options.basis);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    const std::size_t k = k_dist(rng);
    std::vector<int> m(k);
    int total = 0;
    for (auto& mj : m) total += (mj = m_dist(rng));
    if (total < 1 || total > options.m_max) continue;
    const int max_m = *std::max_element(m.begin(), m.end());
    const int n_lo = options.upper_only ? max_m : 0;
    if (n_lo > options.n_max) continue;
    const int n = std::uniform_int_distribution<int>(n_lo, options.n_max)(rng);
    MultiIndex idx(n, m);
    const std::size_t L = required_length(idx, options.guard);

    std::vector<TruncatedSeries<Rational>> fs;
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Rational> c(L);
      Rational weight = 1;
      for (std::size_t l = 0; l < L; ++l) {
        c[l] = Rational(num_dist(rng), den_dist(rng));
        c[l].canonicalize();
        if (options.decay) c[l] *= weight;
        weight /= 2;
      }
      if (odd) c[0] = 0;
      TruncatedSeries<Rational> f(options.basis, std::move(c), options.halved_constant && !odd);
      if (options.decay && !(estimate_radius(f) > 1.0)) ok = false;
      fs.push_back(std::move(f));
    }
    if (!ok) continue;
    const double declared = options.decay ? 2.0 : std::numeric_limits<double>::infinity();
    return RandomCase{SeriesSystem<Rational>(std::move(fs)), std::move(idx), std::vector<double>(k, declared)};
  }
  throw DomainError("random_case: no admissible system found");
}

}  // namespace hermipade::oracle
