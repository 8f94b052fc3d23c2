#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "grover_gme/log_scalar.hpp"

using grover_gme::InvalidInput;
using grover_gme::log_weight_term;
using grover_gme::RangeError;
using grover_gme::SignedLog;

TEST(SignedLog, ArithmeticMatchesPlainDoubles) {
  const double xs[] = {-3.5, -1e-8, 0.0, 2.0, 7.25e5};
  for (double a : xs) {
    for (double b : xs) {
      const auto la = SignedLog::from_value(a);
      const auto lb = SignedLog::from_value(b);
      EXPECT_NEAR((la * lb).value(), a * b, 1e-12 * std::abs(a * b));
      EXPECT_NEAR((la + lb).value(), a + b, 1e-12 * (std::abs(a) + std::abs(b)));
      EXPECT_NEAR((la - lb).value(), a - b, 1e-12 * (std::abs(a) + std::abs(b)));
    }
  }
}

TEST(SignedLog, ExactCancellationIsZero) {
  const SignedLog x{1, -12345.0};
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x - x).value(), 0.0);
}

TEST(SignedLog, ScaledValueAvoidsUnderflow) {
  const SignedLog tiny{-1, -2000.0};
  EXPECT_EQ(tiny.value(), -0.0);
  EXPECT_NEAR(tiny.scaled_value(2000.0 + std::log(3.0)), -3.0, 1e-12);
}

TEST(LogWeightTerm, AlphaZeroWeightZeroIsOne) {
  for (int n : {1, 5, 100, 10000}) {
    const auto t = log_weight_term(n, 0, 0.0);
    EXPECT_EQ(t.sign, 1);
    EXPECT_EQ(t.value(), 1.0);
  }
}

TEST(LogWeightTerm, AlphaZeroPositiveWeightIsZero) {
  EXPECT_TRUE(log_weight_term(10, 3, 0.0).is_zero());
  EXPECT_LT(log_weight_term(10, 7, std::numbers::pi).value(), 1e-45);  // cos(pi/2) rounds to 6e-17
  EXPECT_EQ(log_weight_term(10, 10, std::numbers::pi).value(), 1.0);
}

TEST(LogWeightTerm, HalfWeightAtQuarterTurn) {
  const auto t = log_weight_term(100, 50, std::numbers::pi / 2);
  EXPECT_NEAR(t.log_magnitude, -50.0 * std::numbers::ln2, 1e-12);
  EXPECT_NEAR(t.value() / std::ldexp(1.0, -50), 1.0, 1e-12);
}

TEST(LogWeightTerm, MaximumOverAlphaHasClosedForm) {
  // argmax alpha* = 2 arccos sqrt((n - w) / n),
  // max = ((n - w)/n)^((n - w)/2) (w/n)^(w/2)
  for (auto [n, w] : {std::pair{10, 3}, {100, 1}, {100, 50}, {1000, 7}}) {
    const double alpha = 2.0 * std::acos(std::sqrt(double(n - w) / n));
    const double expected_log =
        0.5 * (n - w) * std::log(double(n - w) / n) + 0.5 * w * std::log(double(w) / n);
    EXPECT_NEAR(log_weight_term(n, w, alpha).log_magnitude, expected_log, 1e-10 * n);
    EXPECT_LT(log_weight_term(n, w, alpha * 1.01).log_magnitude, expected_log);
    EXPECT_LT(log_weight_term(n, w, alpha * 0.99).log_magnitude, expected_log);
  }
}

TEST(LogWeightTerm, FarBeyondDoubleRange) {
  const auto t = log_weight_term(20000, 100, 1.0);
  EXPECT_TRUE(std::isfinite(t.log_magnitude));
  EXPECT_LT(t.log_magnitude, -745.0);  // exp() of this underflows
  EXPECT_EQ(t.sign, 1);
}

TEST(LogWeightTerm, MatchesDirectPowers) {
  for (int n : {1, 7, 40, 300}) {
    for (int w = 0; w <= n; w += std::max(1, n / 6)) {
      for (double alpha : {0.1, 0.9, 1.5707963267948966, 2.4, 3.0}) {
        const double direct = std::pow(std::cos(alpha / 2), n - w) * std::pow(std::sin(alpha / 2), w);
        if (direct < 1e-300) continue;
        EXPECT_NEAR(log_weight_term(n, w, alpha).value() / direct, 1.0, 1e-12)
            << n << " " << w << " " << alpha;
      }
    }
  }
}

TEST(LogWeightTerm, RejectsBadArguments) {
  EXPECT_THROW(log_weight_term(5, 6, 1.0), InvalidInput);
  EXPECT_THROW(log_weight_term(5, -1, 1.0), InvalidInput);
  EXPECT_THROW(log_weight_term(5, 2, -0.1), RangeError);
  EXPECT_THROW(log_weight_term(5, 2, 3.2), RangeError);
  EXPECT_THROW(log_weight_term(5, 2, std::nan("")), RangeError);
}
