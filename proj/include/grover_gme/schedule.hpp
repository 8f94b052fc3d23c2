#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "grover_gme/error.hpp"
#include "grover_gme/marked_set.hpp"

namespace grover_gme {

/// Rotation angle of one Grover iteration and the iteration count that
/// brings the state closest to |S1>.
struct GroverSchedule {
  double theta = 0.0;       // arcsin sqrt(M / N)
  std::int64_t k_opt = 0;   // closest integer to (pi / (2 theta) - 1) / 2
};

/// Closest integer with exact halves rounded up.
inline std::int64_t closest_integer(double x) {
  return static_cast<std::int64_t>(std::floor(x + 0.5));
}

inline GroverSchedule make_schedule(const MarkedSet& marked) {
  const int n = marked.n();
  const double m = marked.count();
  if (n > 1023) throw RangeError("make_schedule: n > 1023 is not representable");
  const double big_n = std::ldexp(1.0, n);
  if (!(m < big_n)) {
    throw InvalidInput("make_schedule: need M < N = 2^n (M = " + std::to_string(m) + ")");
  }
  // atan2 keeps theta = pi/4 exact for M = N/2, which the rounding rule
  // below depends on.
  const double theta = std::atan2(std::sqrt(m), std::sqrt(big_n - m));
  const double x = (std::numbers::pi / (2.0 * theta) - 1.0) / 2.0;
  if (x > 9.0e18) throw RangeError("make_schedule: k_opt does not fit in 64 bits");
  const std::int64_t k = closest_integer(x);
  return {theta, k < 0 ? 0 : k};
}

/// theta_k = (2k + 1) theta for 0 <= k <= k_opt.
inline double theta_k(const GroverSchedule& sched, std::int64_t k) {
  if (k < 0 || k > sched.k_opt) {
    throw RangeError("theta_k: iteration " + std::to_string(k) + " outside [0, " +
                     std::to_string(sched.k_opt) + "]");
  }
  return static_cast<double>(2 * k + 1) * sched.theta;
}

}  // namespace grover_gme
