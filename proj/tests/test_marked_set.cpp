#include <gtest/gtest.h>

#include <vector>

#include "grover_gme/marked_set.hpp"

using grover_gme::binomial;
using grover_gme::InvalidInput;
using grover_gme::MarkedSet;

TEST(Binomial, SmallAndLarge) {
  EXPECT_EQ(binomial(5, 2), 10.0);
  EXPECT_EQ(binomial(30, 15), 155117520.0);
  EXPECT_EQ(binomial(100, 50), 100891344545564193334812497256.0);
  EXPECT_EQ(binomial(7, 8), 0.0);
  EXPECT_EQ(binomial(7, -1), 0.0);
  EXPECT_NEAR(binomial(1000, 3) / 166167000.0, 1.0, 1e-15);
}

TEST(MarkedSet, Presets) {
  const auto p = MarkedSet::product(30);
  EXPECT_EQ(p.count(), 1.0);
  EXPECT_TRUE(p.is_symmetric());
  EXPECT_TRUE(p.equal_weights());

  const auto g = MarkedSet::ghz(30);
  EXPECT_EQ(g.count(), 2.0);
  EXPECT_TRUE(g.is_symmetric());
  EXPECT_FALSE(g.equal_weights());
  EXPECT_DOUBLE_EQ(g.mean_weight(), 15.0);
  EXPECT_EQ(g.describe(), "{0x1, 30x1}");

  const auto w = MarkedSet::w_state(35);
  EXPECT_EQ(w.count(), 35.0);
  EXPECT_TRUE(w.is_symmetric());
  EXPECT_EQ(w, MarkedSet::dicke(35, 1));

  EXPECT_EQ(MarkedSet::dicke(100, 50).count(), binomial(100, 50));
}

TEST(MarkedSet, FromWeightsGroupsByClass) {
  const std::vector<int> weights{0, 1, 1, 3};
  const auto m = MarkedSet::from_weights(3, weights);
  EXPECT_EQ(m.count(), 4.0);
  EXPECT_EQ(m.classes().at(1), 2.0);
  EXPECT_FALSE(m.is_symmetric());  // only 2 of the 3 weight-1 states
  const std::vector<int> full{0, 1, 1, 1};
  EXPECT_TRUE(MarkedSet::from_weights(3, full).is_symmetric());
}

TEST(MarkedSet, RejectsInvalidSets) {
  const std::vector<int> none;
  EXPECT_THROW(MarkedSet::from_weights(4, none), InvalidInput);
  EXPECT_THROW(MarkedSet::from_counts(4, {{5, 1.0}}), InvalidInput);
  EXPECT_THROW(MarkedSet::from_counts(4, {{-1, 1.0}}), InvalidInput);
  EXPECT_THROW(MarkedSet::from_counts(4, {{1, 5.0}}), InvalidInput);
  EXPECT_THROW(MarkedSet::from_counts(4, {{1, 1.5}}), InvalidInput);
  EXPECT_THROW(MarkedSet::from_counts(4, {{1, 0.0}}), InvalidInput);
  EXPECT_THROW(MarkedSet::product(0), InvalidInput);
  EXPECT_THROW(MarkedSet::dicke(4, 5), InvalidInput);
  const std::vector<int> too_many{0, 0};
  EXPECT_THROW(MarkedSet::from_weights(3, too_many), InvalidInput);
}
