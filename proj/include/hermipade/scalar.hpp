#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace hermipade {

using Rational = mpq_class;

enum class ScalarMode { exact, floating };

// Parses "3", "-7/12", "0.125", "1e-3", "2.5E+2" into an exact rational.
// Decimal input is converted without rounding.
Rational parse_rational(std::string_view text);

// Canonical "p/q" (or "p" when q == 1) form.
std::string to_string(const Rational& value);

// Shortest round-trippable decimal form.
std::string to_string(double value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

// Uniform access to the two scalar modes. Floating comparisons against zero
// always go through an explicit tolerance.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ScalarMode mode = ScalarMode::exact;
  static bool is_zero(const Rational& x, double /*tol*/ = 0.0) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  static Rational from_rational(const Rational& x) { return x; }
  static Rational parse(std::string_view text) { return parse_rational(text); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr ScalarMode mode = ScalarMode::floating;
  static bool is_zero(double x, double tol) { return std::fabs(x) <= tol; }
  static double magnitude(double x) { return std::fabs(x); }
  static double from_rational(const Rational& x) { return x.get_d(); }
  static double parse(std::string_view text) { return parse_rational(text).get_d(); }
};

// Default absolute tolerance for floating-mode zero tests.
inline constexpr double kDefaultTolerance = 1e-12;

}  // namespace hermipade
