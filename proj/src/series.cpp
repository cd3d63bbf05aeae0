#include "hermipade/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hermipade/errors.hpp"

namespace hermipade {

std::string_view basis_name(Basis basis) {
  switch (basis) {
    case Basis::power: return "power";
    case Basis::cosine: return "cosine";
    case Basis::sine: return "sine";
    case Basis::chebyshev_T: return "T";
    case Basis::chebyshev_U: return "U";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "power") return Basis::power;
  if (name == "cosine" || name == "cos") return Basis::cosine;
  if (name == "sine" || name == "sin") return Basis::sine;
  if (name == "T" || name == "chebyshev_T") return Basis::chebyshev_T;
  if (name == "U" || name == "chebyshev_U") return Basis::chebyshev_U;
  throw BasisError("unknown basis: " + std::string(name));
}

template <typename T>
TruncatedSeries<T>::TruncatedSeries(Basis basis, std::vector<T> coeffs, bool halved_constant)
    : basis_(basis), coeffs_(std::move(coeffs)), halved_constant_(halved_constant) {
  if (coeffs_.empty()) throw LengthError("a truncated series needs at least one coefficient");
  if (is_odd_kind(basis_)) {
    if (coeffs_[0] != T(0)) {
      throw BasisError(std::string(basis_name(basis_)) + " series must have a zero coefficient at index 0");
    }
    if (halved_constant_) throw BasisError("halved constant is meaningless for sine/U series");
  }
}

template <typename T>
T TruncatedSeries<T>::effective(std::size_t i) const {
  if (i >= coeffs_.size()) return T(0);
  if (i == 0 && halved_constant_) return coeffs_[0] / T(2);
  return coeffs_[i];
}

template <typename T>
std::vector<T> TruncatedSeries<T>::effective_coeffs() const {
  std::vector<T> out = coeffs_;
  if (halved_constant_) out[0] /= T(2);
  return out;
}

template <typename T>
int TruncatedSeries<T>::degree(double tol) const {
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
    if (!ScalarTraits<T>::is_zero(coeffs_[i], tol)) return i;
  }
  return -1;
}

template <typename T>
SeriesSystem<T>::SeriesSystem(std::vector<TruncatedSeries<T>> functions) : functions_(std::move(functions)) {
  if (functions_.empty()) throw LengthError("a series system needs at least one function");
  for (const auto& f : functions_) {
    if (f.basis() != functions_.front().basis()) throw BasisError("all series in a system must share a basis");
  }
}

template <typename T>
std::size_t SeriesSystem<T>::min_length() const {
  std::size_t len = functions_.front().size();
  for (const auto& f : functions_) len = std::min(len, f.size());
  return len;
}

MultiIndex::MultiIndex(int n_, std::vector<int> m) : n(n_), m_vec(std::move(m)) {
  if (n < 0) throw DomainError("n must be non-negative");
  if (m_vec.empty()) throw DomainError("multi-index needs at least one component");
  for (int mj : m_vec) {
    if (mj < 0) throw DomainError("multi-index components must be non-negative");
  }
  if (order() < 1) throw DomainError("multi-index order m must be at least 1");
}

int MultiIndex::order() const { return std::accumulate(m_vec.begin(), m_vec.end(), 0); }

int MultiIndex::max_m() const { return *std::max_element(m_vec.begin(), m_vec.end()); }

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << "(" << n << ",(";
  for (std::size_t j = 0; j < m_vec.size(); ++j) os << (j ? "," : "") << m_vec[j];
  os << "))";
  return os.str();
}

std::size_t required_length(const MultiIndex& idx, int guard) {
  return static_cast<std::size_t>(idx.n + 2 * idx.order() + guard);
}

template <typename T>
void require_length(const SeriesSystem<T>& system, const MultiIndex& idx, int guard) {
  if (system.k() != idx.k()) {
    throw LengthError("multi-index has " + std::to_string(idx.k()) + " components but the system has " +
                      std::to_string(system.k()) + " series");
  }
  const std::size_t need = required_length(idx, guard);
  if (system.min_length() < need) {
    throw LengthError("multi-index " + idx.to_string() + " with guard " + std::to_string(guard) + " needs " +
                      std::to_string(need) + " coefficients per series, got " +
                      std::to_string(system.min_length()));
  }
}

void require_upper(const MultiIndex& idx) {
  if (!idx.is_upper()) {
    throw UpperTableError("multi-index " + idx.to_string() + " violates n >= max m_j");
  }
}

AnalyticityInfo::AnalyticityInfo(std::vector<double> declared) : declared_radius(std::move(declared)) {
  for (double r : declared_radius) {
    if (!(r > 0.0)) throw DomainError("declared radius must be positive");
  }
}

template <typename T>
TruncatedSeries<T> truncated_multiply(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, std::size_t L) {
  if (a.basis() != Basis::power || b.basis() != Basis::power) {
    throw BasisError("truncated_multiply needs power series");
  }
  if (L == 0) throw LengthError("truncation length must be positive");
  const auto ac = a.effective_coeffs();
  const auto bc = b.effective_coeffs();
  std::vector<T> out(L, T(0));
  for (std::size_t i = 0; i < ac.size() && i < L; ++i) {
    if (ac[i] == T(0)) continue;
    for (std::size_t j = 0; j < bc.size() && i + j < L; ++j) out[i + j] += ac[i] * bc[j];
  }
  return TruncatedSeries<T>(Basis::power, std::move(out));
}

template <typename T>
TruncatedSeries<T> series_divide(const TruncatedSeries<T>& num, const TruncatedSeries<T>& den, std::size_t L) {
  if (num.basis() != Basis::power || den.basis() != Basis::power) {
    throw BasisError("series_divide needs power series");
  }
  if (L == 0) throw LengthError("truncation length must be positive");
  const auto nc = num.effective_coeffs();
  const auto dc = den.effective_coeffs();
  if (dc[0] == T(0)) throw DivisionByNonUnit("series_divide: denominator has zero constant term");
  std::vector<T> q(L, T(0));
  for (std::size_t i = 0; i < L; ++i) {
    T acc = i < nc.size() ? nc[i] : T(0);
    for (std::size_t j = 1; j <= i && j < dc.size(); ++j) acc -= dc[j] * q[i - j];
    q[i] = acc / dc[0];
  }
  return TruncatedSeries<T>(Basis::power, std::move(q));
}

template <typename T>
AssociatedSeries<T> associate_series(const TruncatedSeries<T>& s) {
  switch (s.basis()) {
    case Basis::chebyshev_T:
      return {TruncatedSeries<T>(Basis::power, s.coeffs(), s.halved_constant()),
              TruncatedSeries<T>(Basis::cosine, s.coeffs(), s.halved_constant())};
    case Basis::chebyshev_U:
      return {TruncatedSeries<T>(Basis::power, s.coeffs()), TruncatedSeries<T>(Basis::sine, s.coeffs())};
    default:
      throw BasisError("associate_series needs a Chebyshev T or U series, got " + std::string(basis_name(s.basis())));
  }
}

namespace {

// sum_{l>=0} c_l T_l(x)
double clenshaw_t(const std::vector<double>& c, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = c[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + x * b1 - b2;
}

// sum_{l>=1} c_l U_{l-1}^{textbook}(x), i.e. the U_l convention of this library.
double clenshaw_u(const std::vector<double>& c, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = c[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1;
}

}  // namespace

template <typename T>
double evaluate(const TruncatedSeries<T>& s, double x) {
  std::vector<double> c;
  c.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) c.push_back(to_double(s.effective(i)));

  switch (s.basis()) {
    case Basis::power: {
      double acc = 0.0;
      for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
      return acc;
    }
    case Basis::chebyshev_T:
      if (!(x >= -1.0 && x <= 1.0)) throw DomainError("Chebyshev evaluation outside [-1, 1]");
      return clenshaw_t(c, x);
    case Basis::chebyshev_U:
      if (!(x >= -1.0 && x <= 1.0)) throw DomainError("Chebyshev evaluation outside [-1, 1]");
      return clenshaw_u(c, x);
    case Basis::cosine:
      return clenshaw_t(c, std::cos(x));
    case Basis::sine:
      return std::sin(x) * clenshaw_u(c, std::cos(x));
  }
  return 0.0;
}

template <typename T>
TruncatedSeries<T> linearized_product(const TruncatedSeries<T>& even, const TruncatedSeries<T>& other,
                                      std::size_t L) {
  const bool trig = even.basis() == Basis::cosine && (other.basis() == Basis::cosine || other.basis() == Basis::sine);
  const bool cheb = even.basis() == Basis::chebyshev_T &&
                    (other.basis() == Basis::chebyshev_T || other.basis() == Basis::chebyshev_U);
  if (!trig && !cheb) {
    throw BasisError(std::string("linearized_product: unsupported bases ") + std::string(basis_name(even.basis())) +
                     " x " + std::string(basis_name(other.basis())));
  }
  if (L == 0) throw LengthError("truncation length must be positive");
  const bool odd = is_odd_kind(other.basis());
  const auto a = even.effective_coeffs();
  const auto b = other.effective_coeffs();
  const T half = T(1) / T(2);
  std::vector<T> out(L, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == T(0)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == T(0)) continue;
      const T w = a[i] * b[j] * half;
      if (i + j < L) out[i + j] += w;
      if (!odd) {
        const std::size_t d = i > j ? i - j : j - i;
        if (d < L) out[d] += w;
      } else if (j > i) {
        if (j - i < L) out[j - i] += w;
      } else if (i > j) {
        if (i - j < L) out[i - j] -= w;
      }
    }
  }
  return TruncatedSeries<T>(other.basis(), std::move(out));
}

template <typename T>
TruncatedSeries<T> subtract(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (a.basis() != b.basis()) throw BasisError("subtract: basis mismatch");
  const std::size_t L = std::max(a.size(), b.size());
  std::vector<T> out(L, T(0));
  for (std::size_t i = 0; i < L; ++i) out[i] = a.effective(i) - b.effective(i);
  return TruncatedSeries<T>(a.basis(), std::move(out));
}

template <typename T>
TruncatedSeries<double> to_double(const TruncatedSeries<T>& s) {
  std::vector<double> c;
  c.reserve(s.size());
  for (const auto& v : s.coeffs()) c.push_back(hermipade::to_double(v));
  return TruncatedSeries<double>(s.basis(), std::move(c), s.halved_constant());
}

template <typename T>
SeriesSystem<double> to_double(const SeriesSystem<T>& s) {
  std::vector<TruncatedSeries<double>> fs;
  for (const auto& f : s) fs.push_back(to_double(f));
  return SeriesSystem<double>(std::move(fs));
}

#define HERMIPADE_INSTANTIATE(T)                                                                                \
  template class TruncatedSeries<T>;                                                                            \
  template class SeriesSystem<T>;                                                                               \
  template void require_length(const SeriesSystem<T>&, const MultiIndex&, int);                                 \
  template TruncatedSeries<T> truncated_multiply(const TruncatedSeries<T>&, const TruncatedSeries<T>&,          \
                                                 std::size_t);                                                  \
  template TruncatedSeries<T> series_divide(const TruncatedSeries<T>&, const TruncatedSeries<T>&, std::size_t); \
  template AssociatedSeries<T> associate_series(const TruncatedSeries<T>&);                                     \
  template double evaluate(const TruncatedSeries<T>&, double);                                                  \
  template TruncatedSeries<T> linearized_product(const TruncatedSeries<T>&, const TruncatedSeries<T>&,          \
                                                 std::size_t);                                                  \
  template TruncatedSeries<T> subtract(const TruncatedSeries<T>&, const TruncatedSeries<T>&);                   \
  template TruncatedSeries<double> to_double(const TruncatedSeries<T>&);                                        \
  template SeriesSystem<double> to_double(const SeriesSystem<T>&);

HERMIPADE_INSTANTIATE(Rational)
HERMIPADE_INSTANTIATE(double)

#undef HERMIPADE_INSTANTIATE

}  // namespace hermipade
