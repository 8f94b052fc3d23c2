#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "grover_gme/error.hpp"

namespace grover_gme {

struct Maximum {
  double arg = 0.0;
  double value = 0.0;
};

/// Golden-section search for the maximum of a function unimodal on [lo, hi].
/// Stops once the bracket is narrower than tol. The best point seen (bracket
/// ends included) is returned, so a maximum sitting on an end is not lost.
template <class F>
Maximum golden_section_maximize(F&& f, double lo, double hi, double tol = 1e-12,
                                int max_iterations = 200) {
  if (!(lo <= hi)) throw InvalidInput("golden_section_maximize: lo > hi");
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  Maximum best{lo, f(lo)};
  auto consider = [&best](double x, double fx) {
    if (fx > best.value) best = {x, fx};
  };
  consider(hi, f(hi));

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iterations && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  consider(c, fc);
  consider(d, fd);
  return best;
}

/// Indices of grid samples that are local maxima (plateaus count once, at
/// their left edge). The global best sample is always included.
inline std::vector<std::size_t> local_maxima(std::span<const double> values) {
  std::vector<std::size_t> peaks;
  const std::size_t size = values.size();
  if (size == 0) return peaks;
  std::size_t best = 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (values[i] > values[best]) best = i;
    const bool left_ok = i == 0 || values[i] > values[i - 1];
    const bool right_ok = i + 1 == size || values[i] >= values[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  bool has_best = false;
  for (auto p : peaks) has_best = has_best || p == best;
  if (!has_best) peaks.push_back(best);
  return peaks;
}

/// Maximum of a possibly multimodal function from pre-sampled grid values.
///
/// `grid` holds uniformly spaced abscissae and `values` the function on them.
/// Every local maximum of the samples is refined by golden-section search on
/// the interval spanned by its two neighbours; the best refined point wins.
/// Ties go to the leftmost candidate so the result is deterministic.
template <class F>
Maximum refine_grid_maximum(F&& f, std::span<const double> grid,
                            std::span<const double> values, double tol = 1e-12) {
  if (grid.empty() || grid.size() != values.size()) {
    throw InvalidInput("refine_grid_maximum: grid and values must be nonempty and equal in size");
  }
  Maximum best{grid[0], values[0]};
  const std::size_t last = grid.size() - 1;
  for (std::size_t i : local_maxima(values)) {
    if (values[i] > best.value) best = {grid[i], values[i]};
    const double lo = grid[i == 0 ? 0 : i - 1];
    const double hi = grid[i == last ? last : i + 1];
    if (lo == hi) continue;
    const Maximum local = golden_section_maximize(f, lo, hi, tol);
    if (local.value > best.value) best = local;
  }
  return best;
}

/// Uniform grid of `points` samples on [lo, hi] followed by refinement of
/// every local maximum.
template <class F>
Maximum maximize_on_grid(F&& f, double lo, double hi, std::size_t points = 1025,
                         double tol = 1e-12) {
  if (points < 2) throw InvalidInput("maximize_on_grid: need at least two grid points");
  std::vector<double> grid(points);
  std::vector<double> values(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = i + 1 == points ? hi : lo + step * static_cast<double>(i);
    values[i] = f(grid[i]);
  }
  return refine_grid_maximum(f, grid, values, tol);
}

struct Maximum2 {
  std::array<double, 2> arg{};
  double value = 0.0;
};

/// Nelder-Mead simplex ascent in two variables. Stops when the spread of the
/// simplex values falls below value_tol and its extent below arg_tol, or
/// after max_iterations.
template <class F>
Maximum2 nelder_mead_maximize(F&& f, std::array<double, 2> start, std::array<double, 2> step,
                              double arg_tol = 1e-12, double value_tol = 1e-16,
                              int max_iterations = 2000) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> p{start, Point{start[0] + step[0], start[1]},
                         Point{start[0], start[1] + step[1]}};
  std::array<double, 3> v{f(p[0]), f(p[1]), f(p[2])};
  auto lerp = [](const Point& a, const Point& b, double t) {
    return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };
  for (int it = 0; it < max_iterations; ++it) {
    // order: p[0] best, p[2] worst
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] > v[b]; });
    p = {p[idx[0]], p[idx[1]], p[idx[2]]};
    v = {v[idx[0]], v[idx[1]], v[idx[2]]};

    double extent = 0.0;
    for (int i = 1; i < 3; ++i) {
      extent = std::max({extent, std::abs(p[i][0] - p[0][0]), std::abs(p[i][1] - p[0][1])});
    }
    if (extent < arg_tol || (v[0] - v[2] < value_tol && extent < 1e3 * arg_tol)) break;

    const Point centroid{(p[0][0] + p[1][0]) / 2, (p[0][1] + p[1][1]) / 2};
    const Point reflected = lerp(p[2], centroid, 2.0);
    const double fr = f(reflected);
    if (fr > v[0]) {
      const Point expanded = lerp(p[2], centroid, 3.0);
      const double fe = f(expanded);
      if (fe > fr) {
        p[2] = expanded;
        v[2] = fe;
      } else {
        p[2] = reflected;
        v[2] = fr;
      }
    } else if (fr > v[1]) {
      p[2] = reflected;
      v[2] = fr;
    } else {
      const bool outside = fr > v[2];
      const Point contracted = outside ? lerp(p[2], centroid, 1.5) : lerp(p[2], centroid, 0.5);
      const double fc = f(contracted);
      if (fc > std::max(fr, v[2])) {
        p[2] = contracted;
        v[2] = fc;
      } else {
        for (int i = 1; i < 3; ++i) {
          p[i] = lerp(p[0], p[i], 0.5);
          v[i] = f(p[i]);
        }
      }
    }
  }
  const auto best = std::max_element(v.begin(), v.end()) - v.begin();
  return {p[best], v[best]};
}

}  // namespace grover_gme
