#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "grover_gme/maximize.hpp"

using namespace grover_gme;

TEST(GoldenSection, Quadratic) {
  const auto m = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, -1.0, 2.0);
  EXPECT_NEAR(m.arg, 0.3, 1e-7);
  EXPECT_NEAR(m.value, 0.0, 1e-14);
}

TEST(GoldenSection, MaximumOnBracketEnd) {
  const auto m = golden_section_maximize([](double x) { return x; }, 0.0, 1.0);
  EXPECT_EQ(m.arg, 1.0);
  EXPECT_EQ(m.value, 1.0);
}

TEST(GoldenSection, RejectsReversedBracket) {
  EXPECT_THROW(golden_section_maximize([](double x) { return x; }, 1.0, 0.0), InvalidInput);
}

TEST(LocalMaxima, PlateauCountedOnce) {
  const std::vector<double> v{0, 1, 1, 1, 0, 2, 0};
  const auto peaks = local_maxima(v);
  ASSERT_EQ(peaks.size(), 2u);
  EXPECT_EQ(peaks[0], 1u);
  EXPECT_EQ(peaks[1], 5u);
}

TEST(LocalMaxima, EndpointsQualify) {
  const std::vector<double> v{3, 2, 1, 2, 4};
  const auto peaks = local_maxima(v);
  ASSERT_EQ(peaks.size(), 2u);
  EXPECT_EQ(peaks[0], 0u);
  EXPECT_EQ(peaks[1], 4u);
}

TEST(GridMaximize, FindsGlobalOfBimodal) {
  // two bumps; the narrow right one is higher
  auto f = [](double x) {
    return std::exp(-(x - 0.8) * (x - 0.8) / 0.1) + 1.05 * std::exp(-(x - 2.6) * (x - 2.6) / 0.002);
  };
  const auto m = maximize_on_grid(f, 0.0, std::numbers::pi);
  EXPECT_NEAR(m.arg, 2.6, 1e-6);
  EXPECT_NEAR(m.value, 1.05, 1e-9);
}

TEST(GridMaximize, SharpCuspBetweenSamples) {
  auto f = [](double x) { return -std::abs(x - 1.2345678); };
  const auto m = maximize_on_grid(f, 0.0, 3.0, 65);
  EXPECT_NEAR(m.arg, 1.2345678, 1e-11);
}

TEST(NelderMead, TwoDimensionalQuadratic) {
  auto f = [](const std::array<double, 2>& x) {
    return -(x[0] - 1.0) * (x[0] - 1.0) - 3.0 * (x[1] + 0.5) * (x[1] + 0.5) + 0.4 * x[0] * x[1];
  };
  const auto m = nelder_mead_maximize(f, {0.0, 0.0}, {0.1, 0.1});
  // gradient zero: -2(x-1) + 0.4y = 0, -6(y+0.5) + 0.4x = 0
  const double y = (0.4 * 1.0 - 3.0) / (6.0 - 0.08);
  const double x = 1.0 + 0.2 * y;
  EXPECT_NEAR(m.arg[0], x, 1e-7);
  EXPECT_NEAR(m.arg[1], y, 1e-7);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](const std::array<double, 2>& x) {
    return -(1 - x[0]) * (1 - x[0]) - 100 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]);
  };
  const auto m = nelder_mead_maximize(f, {-1.2, 1.0}, {0.1, 0.1}, 1e-12, 1e-20, 5000);
  EXPECT_NEAR(m.arg[0], 1.0, 1e-5);
  EXPECT_NEAR(m.arg[1], 1.0, 1e-5);
}
