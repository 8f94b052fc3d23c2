#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "grover_gme/error.hpp"

namespace grover_gme {

/// A real number stored as sign * exp(log_magnitude).
///
/// Products like cos^(n-w)(a) sin^w(a) underflow double precision long before
/// n reaches a few thousand; keeping the logarithm lets the overlap formulas
/// combine such terms and only leave the log domain once the result is O(1).
/// Zero is sign == 0 with log_magnitude == -inf.
struct SignedLog {
  int sign = 0;
  double log_magnitude = -std::numeric_limits<double>::infinity();

  static SignedLog zero() { return {}; }
  static SignedLog one() { return {1, 0.0}; }

  static SignedLog from_value(double x) {
    if (x == 0.0) return zero();
    return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
  }

  bool is_zero() const { return sign == 0; }

  double value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_magnitude);
  }

  /// value() * exp(log_scale), without materialising value() first.
  double scaled_value(double log_scale) const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_magnitude + log_scale);
  }

  friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.sign * b.sign, a.log_magnitude + b.log_magnitude};
  }

  friend SignedLog operator+(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const SignedLog& big = a.log_magnitude >= b.log_magnitude ? a : b;
    const SignedLog& small = a.log_magnitude >= b.log_magnitude ? b : a;
    const double ratio = std::exp(small.log_magnitude - big.log_magnitude);
    if (big.sign == small.sign) {
      return {big.sign, big.log_magnitude + std::log1p(ratio)};
    }
    if (ratio == 1.0) return zero();
    return {big.sign, big.log_magnitude + std::log1p(-ratio)};
  }

  friend SignedLog operator-(const SignedLog& a, const SignedLog& b) {
    return a + SignedLog{-b.sign, b.log_magnitude};
  }
};

namespace detail {

/// exponent * log|base| with the convention 0 * log 0 = 0.
inline double power_log(double base, double exponent) {
  if (exponent == 0.0) return 0.0;
  if (base == 0.0) return -std::numeric_limits<double>::infinity();
  return exponent * std::log(std::abs(base));
}

}  // namespace detail

/// cos^(n-w)(alpha/2) * sin^w(alpha/2) in signed-log form.
///
/// alpha in [0, pi], where the result is never negative.
inline SignedLog log_weight_term(int n, int w, double alpha) {
  if (n < 0 || w < 0 || w > n) {
    throw InvalidInput("log_weight_term: need 0 <= w <= n");
  }
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi)) {
    throw RangeError("log_weight_term: alpha outside [0, pi]");
  }
  const double half = 0.5 * alpha;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const double log_mag = detail::power_log(c, n - w) + detail::power_log(s, w);
  if (std::isinf(log_mag) && log_mag < 0) return SignedLog::zero();
  return {1, log_mag};
}

}  // namespace grover_gme
