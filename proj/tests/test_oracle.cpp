#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "grover_gme/gme.hpp"
#include "grover_gme/oracle.hpp"

using namespace grover_gme;
using namespace grover_gme::oracle;

TEST(Oracle, TwoQubitsOneStepHitsTarget) {
  const std::vector<std::string> bits{"11"};
  const auto psi = grover_state(MarkedBits::from_bitstrings(2, bits), 1);
  const std::vector<double> expected{0, 0, 0, 1};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(psi.amplitudes[i], expected[i], 1e-15);
}

TEST(Oracle, BitstringsAreMostSignificantFirst) {
  const std::vector<std::string> bits{"100"};
  EXPECT_EQ(MarkedBits::from_bitstrings(3, bits).indices().front(), 4u);
}

TEST(Oracle, NormPreserved) {
  std::mt19937_64 rng(7);
  std::vector<std::uint64_t> marked;
  for (std::uint64_t x = 0; x < 4096; ++x) {
    if (rng() % 97 == 0) marked.push_back(x);
  }
  const MarkedBits bits(12, marked);
  auto s = DenseState::uniform(12);
  for (int k = 0; k < 60; ++k) {
    s = grover_step(std::move(s), bits);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  }
}

TEST(Oracle, RotatesInMarkedPlane) {
  const auto bits = MarkedBits::from_marked_set(MarkedSet::product(10));
  const double theta = std::asin(std::sqrt(1.0 / 1024));
  for (int k : {0, 3, 5, 25}) {
    const auto s = grover_state(bits, k);
    EXPECT_NEAR(s.amplitudes[0], std::sin((2 * k + 1) * theta), 1e-12) << k;
  }
}

TEST(Oracle, UniformStateIsProduct) {
  const auto bits = MarkedBits::from_marked_set(MarkedSet::ghz(8));
  EXPECT_LT(oracle_gme(grover_state(bits, 0), false).gme, 1e-12);
}

TEST(Oracle, ThreeQubitWState) {
  std::vector<double> amp(8, 0.0);
  amp[1] = amp[2] = amp[4] = 1.0 / std::sqrt(3.0);
  const DenseState w{3, amp};
  EXPECT_NEAR(oracle_gme(w, false).gme, 5.0 / 9.0, 1e-10);
  EXPECT_NEAR(oracle_gme(w, true).gme, 5.0 / 9.0, 1e-10);
}

TEST(Oracle, RestrictedAgreesWithUnrestrictedBelowQuarterTurn) {
  const auto m = MarkedSet::w_state(10);
  const auto bits = MarkedBits::from_marked_set(m);
  const auto sched = make_schedule(m);
  for (std::int64_t k = 0; k <= sched.k_opt; ++k) {
    if (theta_k(sched, k) > std::numbers::pi / 2) continue;
    const auto psi = grover_state(bits, k);
    EXPECT_NEAR(oracle_gme(psi, true).gme, oracle_gme(psi, false).gme, 1e-9) << k;
  }
}

TEST(Oracle, PermutationSymmetry) {
  const auto sym = MarkedBits::from_marked_set(MarkedSet::dicke(6, 2));
  EXPECT_TRUE(check_permutation_symmetry(grover_state(sym, 2)));
  const std::vector<std::string> bits{"000000", "000001"};
  EXPECT_FALSE(check_permutation_symmetry(grover_state(MarkedBits::from_bitstrings(6, bits), 2)));
}

TEST(Oracle, Errors) {
  EXPECT_THROW(MarkedBits(15, {0}), ResourceError);
  EXPECT_THROW(MarkedBits(3, {}), InvalidInput);
  EXPECT_THROW(MarkedBits(2, {0, 1, 2, 3}), InvalidInput);
  EXPECT_THROW(MarkedBits(2, {4}), InvalidInput);
  const std::vector<std::string> bad{"01x"};
  EXPECT_THROW(MarkedBits::from_bitstrings(3, bad), InvalidInput);
}

TEST(Oracle, Deterministic) {
  const std::vector<std::string> bits{"00000001", "00010001", "11000000"};
  const auto psi = grover_state(MarkedBits::from_bitstrings(8, bits), 3);
  EXPECT_EQ(oracle_gme(psi, false).gme, oracle_gme(psi, false).gme);
}
