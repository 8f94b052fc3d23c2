#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "grover_gme/error.hpp"
#include "grover_gme/log_scalar.hpp"
#include "grover_gme/marked_set.hpp"

namespace grover_gme {

/// The two alpha-dependent pieces of <psi_k|phi(alpha)>.
///
/// For the symmetric product state phi(alpha) = (cos(alpha/2)|0> + sin(alpha/2)|1>)^n
/// and the Grover state cos(theta_k)|S0> + sin(theta_k)|S1>,
///   <psi_k|phi> = cos(theta_k) * unmarked + sin(theta_k) * marked
/// with unmarked = <S0|phi> and marked = <S1|phi>.
struct OverlapTerms {
  double unmarked = 0.0;
  double marked = 0.0;

  double combine(double theta_k) const {
    return std::cos(theta_k) * unmarked + std::sin(theta_k) * marked;
  }
};

/// Evaluates the exact symmetric-product overlap for one marked set.
///
/// Every power is accumulated in signed-log form and only exponentiated after
/// the normalisations 1/sqrt(N - M) and 1/sqrt(M) have been folded in, so the
/// model works for n far beyond the double-precision range of 2^n.
/// alpha ranges over [0, pi]; the complex overload adds the relative phase
/// beta of |1> against |0>.
class OverlapModel {
 public:
  explicit OverlapModel(MarkedSet marked) : marked_(std::move(marked)) {
    const int n = marked_.n();
    const double log2 = std::numbers::ln2;
    log_sqrt_marked_ = 0.5 * marked_.log_count();
    const double log_fraction = marked_.log_count() - n * log2;  // log(M / N)
    if (!(log_fraction < 0.0)) {
      throw InvalidInput("overlap: need M < N = 2^n");
    }
    log_sqrt_unmarked_ = 0.5 * (n * log2 + std::log1p(-std::exp(log_fraction)));
    classes_.assign(marked_.classes().begin(), marked_.classes().end());
    for (auto& [w, c] : classes_) c = std::log(c);
  }

  const MarkedSet& marked() const { return marked_; }

  /// sum_i cos^(n - n_i)(alpha/2) sin^(n_i)(alpha/2) over the marked states.
  SignedLog marked_sum(double alpha) const {
    check_alpha(alpha);
    const int n = marked_.n();
    const double half = 0.5 * alpha;
    const double c = std::cos(half);
    const double s = std::sin(half);
    const double log_c = std::log(c);
    const double log_s = std::log(s);
    SignedLog sum;
    for (const auto& [w, log_mult] : classes_) {
      const double log_mag = class_log_magnitude(n, w, log_mult, log_c, log_s);
      if (std::isinf(log_mag)) continue;
      sum = sum + SignedLog{1, log_mag};
    }
    return sum;
  }

  /// (cos(alpha/2) + sin(alpha/2))^n, written as 2^(n/2) sin^n(pi/4 + alpha/2).
  SignedLog uniform_sum(double alpha) const {
    check_alpha(alpha);
    const int n = marked_.n();
    const double s = std::sin(0.25 * std::numbers::pi + 0.5 * alpha);
    return {1, 0.5 * n * std::numbers::ln2 + n * std::log(s)};
  }

  OverlapTerms terms(double alpha) const {
    const SignedLog marked = marked_sum(alpha);
    const SignedLog all = uniform_sum(alpha);
    return {all.scaled_value(-log_sqrt_unmarked_) - marked.scaled_value(-log_sqrt_unmarked_),
            marked.scaled_value(-log_sqrt_marked_)};
  }

  double overlap(double theta_k, double alpha) const { return terms(alpha).combine(theta_k); }

  /// <psi_k|phi(alpha, beta)> for phi = (cos(alpha/2)|0> + e^{i beta} sin(alpha/2)|1>)^n.
  std::complex<double> overlap(double theta_k, double alpha, double beta) const {
    check_alpha(alpha);
    const int n = marked_.n();
    const double c = std::cos(0.5 * alpha);
    const double s = std::sin(0.5 * alpha);
    const double log_c = std::log(c);
    const double log_s = std::log(s);

    double top = -std::numeric_limits<double>::infinity();
    for (const auto& [w, log_mult] : classes_) {
      top = std::max(top, class_log_magnitude(n, w, log_mult, log_c, log_s));
    }
    std::complex<double> scaled_sum = 0.0;  // marked sum / exp(top)
    if (!std::isinf(top)) {
      for (const auto& [w, log_mult] : classes_) {
        const double log_mag = class_log_magnitude(n, w, log_mult, log_c, log_s);
        if (std::isinf(log_mag)) continue;
        scaled_sum += std::polar(std::exp(log_mag - top), w * beta);
      }
    }
    const std::complex<double> z = c + std::polar(s, beta);
    const std::complex<double> all = std::polar(std::exp(n * std::log(std::abs(z)) - log_sqrt_unmarked_),
                                                n * std::arg(z));
    const std::complex<double> marked_to_unmarked =
        std::isinf(top) ? 0.0 : scaled_sum * std::exp(top - log_sqrt_unmarked_);
    const std::complex<double> marked =
        std::isinf(top) ? 0.0 : scaled_sum * std::exp(top - log_sqrt_marked_);
    return std::cos(theta_k) * (all - marked_to_unmarked) + std::sin(theta_k) * marked;
  }

  /// A(alpha) = sin^n(pi/4 + alpha/2).
  double a_profile(double alpha) const {
    return uniform_sum(alpha).scaled_value(-0.5 * marked_.n() * std::numbers::ln2);
  }

  /// B(alpha) = (1/sqrt(M)) sum_i cos^(n - n_i)(alpha/2) sin^(n_i)(alpha/2).
  double b_profile(double alpha) const { return marked_sum(alpha).scaled_value(-log_sqrt_marked_); }

  double log_sqrt_marked() const { return log_sqrt_marked_; }

 private:
  static void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi)) throw RangeError("alpha outside [0, pi]");
  }

  static double class_log_magnitude(int n, int w, double log_mult, double log_c, double log_s) {
    const double lc = (n - w) == 0 ? 0.0 : (n - w) * log_c;
    const double ls = w == 0 ? 0.0 : w * log_s;
    return lc + ls + log_mult;
  }

  MarkedSet marked_;
  std::vector<std::pair<int, double>> classes_;  // weight, log multiplicity
  double log_sqrt_marked_ = 0.0;
  double log_sqrt_unmarked_ = 0.0;
};

/// Exact <psi_k|phi(alpha)> including the subtraction of the marked states
/// from the uniform sum. theta_k in [0, pi), alpha in [0, pi].
inline double overlap(const MarkedSet& marked, double theta_k, double alpha) {
  if (!(theta_k >= 0.0 && theta_k < std::numbers::pi)) {
    throw RangeError("overlap: theta_k outside [0, pi)");
  }
  return OverlapModel(marked).overlap(theta_k, alpha);
}

struct AbRow {
  double alpha = 0.0;
  double a = 0.0;
  double b = 0.0;
  double g = 0.0;
};

/// A(alpha), B(alpha) and g = A + B at each requested alpha.
inline std::vector<AbRow> ab_profile(const MarkedSet& marked, std::span<const double> alphas) {
  const OverlapModel model(marked);
  std::vector<AbRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    const double a = model.a_profile(alpha);
    const double b = model.b_profile(alpha);
    rows.push_back({alpha, a, b, a + b});
  }
  return rows;
}

/// `points` equally spaced angles covering [0, pi], both ends included.
inline std::vector<double> uniform_alpha_grid(std::size_t points) {
  if (points < 2) throw InvalidInput("alpha grid needs at least two points");
  std::vector<double> grid(points);
  const double step = std::numbers::pi / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = step * static_cast<double>(i);
  grid.back() = std::numbers::pi;
  return grid;
}

}  // namespace grover_gme
