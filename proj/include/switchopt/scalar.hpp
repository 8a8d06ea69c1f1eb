#pragma once

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

namespace switchopt {

/// Arbitrary-precision rational. gmpxx keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

enum class Arithmetic { exact, floating };

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

template <Scalar T>
inline constexpr Arithmetic arithmetic_of_v = is_exact_v<T> ? Arithmetic::exact : Arithmetic::floating;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Numeric failure: LP breakdown, singular matrix, enumeration cap, timeout.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Parses "p/q", "p", or a terminating decimal such as "-1.25" exactly.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Shortest decimal that round-trips to the same binary64 value.
std::string to_string(double value);

/// Exact decimal expansion if the denominator has only factors 2 and 5.
bool terminating_decimal(const Rational& value, std::string& out);

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

template <Scalar T>
T from_rational(const Rational& v) {
  if constexpr (is_exact_v<T>)
    return v;
  else
    return v.get_d();
}

/// log10 |v| without overflowing for huge numerators or denominators.
double log10_abs(const Rational& v);
inline double log10_abs(double v) { return std::log10(std::fabs(v)); }

inline Rational abs_value(const Rational& v) { return abs(v); }
inline double abs_value(double v) { return std::fabs(v); }

inline int sign_of(const Rational& v) { return sgn(v); }
inline int sign_of(double v) { return (v > 0) - (v < 0); }

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

/// Integer power by repeated squaring.
template <Scalar T>
T power(T base, unsigned exponent) {
  T result = 1;
  while (exponent > 0) {
    if (exponent & 1u)
      result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace switchopt
