#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermipade/polynomial.hpp"
#include "hermipade/scalar.hpp"
#include "hermipade/series.hpp"

namespace hermipade::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(parse_rational(s));
  return out;
}

// 1/l! for l < L.
inline std::vector<Rational> exp_coeffs(std::size_t L) {
  std::vector<Rational> c(L);
  Rational f = 1;
  for (std::size_t l = 0; l < L; ++l) {
    if (l > 0) f /= static_cast<long>(l);
    c[l] = f;
  }
  return c;
}

// r^l for l < L, optionally with a zero constant term.
inline std::vector<Rational> geometric_coeffs(std::size_t L, const Rational& r = 1, bool drop_constant = false) {
  std::vector<Rational> c(L);
  Rational p = 1;
  for (std::size_t l = 0; l < L; ++l) {
    c[l] = p;
    p *= r;
  }
  if (drop_constant) c[0] = 0;
  return c;
}

template <typename T = Rational>
SeriesSystem<T> system_of(Basis basis, const std::vector<std::vector<Rational>>& fs) {
  std::vector<TruncatedSeries<T>> out;
  for (const auto& c : fs) {
    std::vector<T> v;
    for (const auto& x : c) v.push_back(ScalarTraits<T>::from_rational(x));
    out.emplace_back(basis, std::move(v));
  }
  return SeriesSystem<T>(std::move(out));
}

inline Polynomial<Rational> poly(std::initializer_list<const char*> items) { return Polynomial<Rational>(qs(items)); }

inline std::string data_path(const std::string& name) { return std::string(HERMIPADE_TEST_DATA) + "/" + name; }

}  // namespace hermipade::testing
