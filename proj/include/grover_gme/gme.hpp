#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grover_gme/error.hpp"
#include "grover_gme/marked_set.hpp"
#include "grover_gme/maximize.hpp"
#include "grover_gme/overlap.hpp"
#include "grover_gme/schedule.hpp"

namespace grover_gme {

/// Coarse grid resolution: 1024 intervals on [0, pi].
inline constexpr std::size_t kGridIntervals = 1024;
/// Golden-section stopping width in alpha (and beta).
inline constexpr double kAlphaTolerance = 1e-12;
/// Coarse (alpha, beta) grid used when the relative phase must be searched.
inline constexpr std::size_t kPhaseGridAlpha = 256;
inline constexpr std::size_t kPhaseGridBeta = 64;
inline constexpr std::size_t kPhaseRefineCandidates = 4;

struct GmeValue {
  double gme = 0.0;
  double alpha_star = 0.0;
  double beta_star = 0.0;
};

/// Symmetric-restricted GME of the Grover states of one marked set.
///
/// The overlap splits as cos(theta_k) U(alpha) + sin(theta_k) V(alpha), so U
/// and V are sampled once on the coarse grid and each theta_k only costs a
/// grid scan plus golden-section refinement of the local maxima. The result
/// for a given theta_k does not depend on what else was evaluated.
///
/// For theta_k <= pi/2 every amplitude is non-negative and beta = 0 is
/// optimal. k_opt can overshoot pi/2 by up to theta; there the unmarked
/// amplitudes are negative and the relative phase beta is searched as well.
class GmeSolver {
 public:
  explicit GmeSolver(const MarkedSet& marked) : model_(marked) {
    if (!marked.is_symmetric()) {
      throw UnsupportedInput(
          "symmetric-restricted GME needs a permutation-symmetric marked set (full weight "
          "classes); use the dense oracle for " + marked.describe());
    }
    grid_ = uniform_alpha_grid(kGridIntervals + 1);
    unmarked_.resize(grid_.size());
    marked_.resize(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      const OverlapTerms t = model_.terms(grid_[i]);
      unmarked_[i] = t.unmarked;
      marked_[i] = t.marked;
    }
  }

  const OverlapModel& model() const { return model_; }

  GmeValue evaluate(double theta_k) const {
    if (!(theta_k >= 0.0 && theta_k < std::numbers::pi)) {
      throw RangeError("gme: theta_k outside [0, pi)");
    }
    const double c = std::cos(theta_k);
    if (c < 0.0) return evaluate_with_phase(theta_k);
    const double s = std::sin(theta_k);
    std::vector<double> values(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      values[i] = std::abs(c * unmarked_[i] + s * marked_[i]);
    }
    auto f = [&](double alpha) { return std::abs(model_.overlap(theta_k, alpha)); };
    const Maximum best = refine_grid_maximum(f, grid_, values, kAlphaTolerance);
    return {std::max(0.0, 1.0 - best.value * best.value), best.arg, 0.0};
  }

 private:
  /// Maps any (alpha, beta) to alpha in [0, pi], beta in [0, pi] describing
  /// the same overlap magnitude for a real state.
  static std::pair<double, double> canonical_angles(double alpha, double beta) {
    const double pi = std::numbers::pi;
    const double two_pi = 2.0 * pi;
    alpha = std::fmod(alpha, two_pi);
    if (alpha < 0.0) alpha += two_pi;
    if (alpha > pi) {  // cos(a/2) < 0: flip the global sign
      alpha = two_pi - alpha;
      beta += pi;
    }
    beta = std::fmod(beta, two_pi);
    if (beta < 0.0) beta += two_pi;
    if (beta > pi) beta = two_pi - beta;  // complex conjugate, same |overlap|
    return {alpha, beta};
  }

  // Real amplitudes make beta and -beta equivalent, so beta in [0, pi].
  GmeValue evaluate_with_phase(double theta_k) const {
    const double pi = std::numbers::pi;
    const std::size_t na = kPhaseGridAlpha + 1;
    const std::size_t nb = kPhaseGridBeta + 1;
    const double da = pi / kPhaseGridAlpha;
    const double db = pi / kPhaseGridBeta;
    auto f = [&](double alpha, double beta) {
      return std::abs(model_.overlap(theta_k, alpha, beta));
    };
    std::vector<double> values(na * nb);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return values[i * nb + j]; };
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) at(i, j) = f(std::min(pi, i * da), std::min(pi, j * db));
    }

    struct Candidate {
      double value;
      std::size_t i, j;
    };
    std::vector<Candidate> peaks;
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        bool is_peak = true;
        for (int di = -1; di <= 1 && is_peak; ++di) {
          for (int dj = -1; dj <= 1; ++dj) {
            if (di == 0 && dj == 0) continue;
            const auto ii = static_cast<std::ptrdiff_t>(i) + di;
            const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
            if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(na) ||
                jj >= static_cast<std::ptrdiff_t>(nb)) {
              continue;
            }
            if (values[ii * nb + jj] > at(i, j)) {
              is_peak = false;
              break;
            }
          }
        }
        if (is_peak) peaks.push_back({at(i, j), i, j});
      }
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    if (peaks.size() > kPhaseRefineCandidates) peaks.resize(kPhaseRefineCandidates);

    // Nelder-Mead polish in unconstrained (alpha, beta); negative alpha folds
    // to (-alpha, beta + pi), which is the same product state.
    auto g = [&](const std::array<double, 2>& x) {
      const auto [alpha, beta] = canonical_angles(x[0], x[1]);
      return f(alpha, beta);
    };
    GmeValue result{1.0, 0.0, 0.0};
    double best = -1.0;
    for (const auto& p : peaks) {
      const Maximum2 m = nelder_mead_maximize(
          g, {std::min(pi, p.i * da), std::min(pi, p.j * db)}, {0.5 * da, 0.5 * db},
          kAlphaTolerance);
      const double value = std::max(m.value, p.value);
      if (value > best) {
        best = value;
        const auto [alpha, beta] = m.value >= p.value
                                       ? canonical_angles(m.arg[0], m.arg[1])
                                       : std::pair{std::min(pi, p.i * da), std::min(pi, p.j * db)};
        result = {std::max(0.0, 1.0 - value * value), alpha, beta};
      }
    }
    return result;
  }

  OverlapModel model_;
  std::vector<double> grid_;
  std::vector<double> unmarked_;
  std::vector<double> marked_;
};

/// 1 - max_alpha |<psi_k|phi(alpha)>|^2 for a symmetric marked set.
inline GmeValue gme_exact(const MarkedSet& marked, double theta_k) {
  return GmeSolver(marked).evaluate(theta_k);
}

struct BMax {
  double value = 0.0;
  double alpha_star = 0.0;
};

/// max over alpha in [0, pi] of B(alpha), the overlap of |S1> with the
/// symmetric product state. Optimised on log B.
inline BMax b_max(const MarkedSet& marked) {
  const OverlapModel model(marked);
  auto log_sum = [&](double alpha) { return model.marked_sum(alpha).log_magnitude; };
  const Maximum best =
      maximize_on_grid(log_sum, 0.0, std::numbers::pi, kGridIntervals + 1, kAlphaTolerance);
  return {std::exp(best.value - model.log_sqrt_marked()), best.arg};
}

/// arctan(1 / B_max) for a precomputed B_max.
inline double turning_theta_from_b_max(double b) {
  if (!(b > 0.0)) throw DegenerateInput("turning point undefined: B_max = 0");
  return std::atan2(1.0, b);
}

/// Angle theta_kT at which the asymptotic GME switches branches.
inline double turning_point(const MarkedSet& marked) {
  return turning_theta_from_b_max(b_max(marked).value);
}

/// Large-N GME given B_max: sin^2(theta_k) up to the turning angle,
/// 1 - sin^2(theta_k) B_max^2 after it.
inline double gme_asymptotic_from_b_max(double b, double theta_k) {
  const double turning = turning_theta_from_b_max(b);
  const double s = std::sin(theta_k);
  if (theta_k <= turning) return s * s;
  return 1.0 - s * s * b * b;
}

inline double gme_asymptotic(const MarkedSet& marked, double theta_k) {
  return gme_asymptotic_from_b_max(b_max(marked).value, theta_k);
}

enum class CurveMode { exact, asymptotic, both };

struct GmePoint {
  std::int64_t k = 0;
  double ratio = 0.0;  // k / k_opt
  double theta_k = 0.0;
  std::optional<double> gme_exact;
  std::optional<double> gme_asymptotic;
  std::optional<double> alpha_star;

  /// The exact value when available, otherwise the asymptotic one.
  double gme() const { return gme_exact ? *gme_exact : gme_asymptotic.value_or(0.0); }
};

struct GmeCurve {
  GroverSchedule schedule;
  std::vector<GmePoint> points;
  double b_max = 0.0;
  double turning_theta = 0.0;
  double turning_k = 0.0;               // (2/pi) theta_kT k_opt
  std::int64_t turning_k_nearest = 0;
  double peak_gme = 0.0;
  std::int64_t peak_k = 0;

  double turning_ratio() const { return 2.0 / std::numbers::pi * turning_theta; }
};

/// GME at every iteration k = 0..k_opt together with the turning point and
/// the observed peak (taken from the exact values when they are computed).
inline GmeCurve gme_curve(const MarkedSet& marked, CurveMode mode) {
  GmeCurve curve;
  curve.schedule = make_schedule(marked);
  const BMax bm = b_max(marked);
  curve.b_max = bm.value;
  curve.turning_theta = turning_theta_from_b_max(bm.value);
  curve.turning_k = 2.0 / std::numbers::pi * curve.turning_theta *
                    static_cast<double>(curve.schedule.k_opt);
  curve.turning_k_nearest = closest_integer(curve.turning_k);

  std::optional<GmeSolver> solver;
  if (mode != CurveMode::asymptotic) solver.emplace(marked);

  const std::int64_t k_opt = curve.schedule.k_opt;
  curve.points.reserve(static_cast<std::size_t>(k_opt + 1));
  for (std::int64_t k = 0; k <= k_opt; ++k) {
    GmePoint p;
    p.k = k;
    p.ratio = k_opt == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(k_opt);
    p.theta_k = theta_k(curve.schedule, k);
    if (solver) {
      const GmeValue v = solver->evaluate(p.theta_k);
      p.gme_exact = v.gme;
      p.alpha_star = v.alpha_star;
    }
    if (mode != CurveMode::exact) p.gme_asymptotic = gme_asymptotic_from_b_max(bm.value, p.theta_k);
    if (k == 0 || p.gme() > curve.peak_gme) {
      curve.peak_gme = p.gme();
      curve.peak_k = k;
    }
    curve.points.push_back(p);
  }
  return curve;
}

struct SweepRow {
  int n = 0;
  double b_max = 0.0;
  double turning_theta = 0.0;
  double turning_ratio = 0.0;
  double peak_gme = 0.0;   // sin^2(theta_kT)
  double final_gme = 0.0;  // asymptotic GME at theta_k = pi/2
};

struct SweepReport {
  std::vector<SweepRow> rows;
  double b_max_spread = 0.0;
  double final_gme_spread = 0.0;
  bool scale_invariant = false;
};

inline constexpr double kScaleInvarianceTolerance = 1e-9;

/// Checks whether B_max, and with it the post-turning GME, is the same for
/// every n of a family of marked sets.
inline SweepReport scale_invariance_sweep(const std::function<MarkedSet(int)>& family,
                                          std::span<const int> ns) {
  if (ns.empty()) throw InvalidInput("scale_invariance_sweep: empty n range");
  SweepReport report;
  for (int n : ns) {
    const BMax bm = b_max(family(n));
    SweepRow row;
    row.n = n;
    row.b_max = bm.value;
    row.turning_theta = turning_theta_from_b_max(bm.value);
    row.turning_ratio = 2.0 / std::numbers::pi * row.turning_theta;
    const double s = std::sin(row.turning_theta);
    row.peak_gme = s * s;
    row.final_gme = gme_asymptotic_from_b_max(bm.value, std::numbers::pi / 2);
    report.rows.push_back(row);
  }
  auto spread = [&](auto member) {
    const auto [lo, hi] = std::minmax_element(
        report.rows.begin(), report.rows.end(),
        [&](const SweepRow& a, const SweepRow& b) { return a.*member < b.*member; });
    return (*hi).*member - (*lo).*member;
  };
  report.b_max_spread = spread(&SweepRow::b_max);
  report.final_gme_spread = spread(&SweepRow::final_gme);
  report.scale_invariant = report.b_max_spread <= kScaleInvarianceTolerance;
  return report;
}

}  // namespace grover_gme
