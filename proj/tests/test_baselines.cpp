#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vprfuse/baselines.hpp"

using namespace vprfuse;

TEST(MinValueMatch, Values) {
  const auto d = min_value_match({{0.5, 0.2, 0.9}, 0});
  EXPECT_EQ(*d.place, 1u);
  EXPECT_EQ(d.confidence, -0.2);
  EXPECT_EQ(*min_value_match({{0.3}, 0}).place, 0u);
  EXPECT_EQ(*min_value_match({{0.9, 0.1, 0.4, 0.8, 0.1}, 0}).place, 1u);
  EXPECT_THROW(min_value_match({{}, 0}), ValidationError);
}

TEST(MinEnsembleMatch, SumArbitratesDisagreeingMinima) {
  const auto stack = oracle::to_stack({{0.5, 0.2}, {0.1, 0.6}});
  const auto d = min_ensemble_match(stack);
  EXPECT_EQ(*d.place, 0u);
  EXPECT_DOUBLE_EQ(d.confidence, -0.3);
}

TEST(MinEnsembleMatch, Reductions) {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 50; ++rep) {
    const auto d = oracle::random_distances(rng, 40);
    EXPECT_EQ(min_ensemble_match(oracle::to_stack({d})).place, min_value_match({d, 0}).place);
    EXPECT_EQ(min_ensemble_match(oracle::to_stack({d, d, d})).place, min_value_match({d, 0}).place);
  }
}

TEST(BaselineSelective, Reductions) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 50; ++rep) {
    const auto stack = oracle::to_stack({oracle::random_distances(rng, 30), oracle::random_distances(rng, 30),
                                         oracle::random_distances(rng, 30)});
    const auto all = select_all(stack);
    EXPECT_EQ(baseline_selective_match(stack, all).place, min_ensemble_match(stack).place);
    EXPECT_DOUBLE_EQ(baseline_selective_match(stack, all).confidence, min_ensemble_match(stack).confidence);
    auto one = all;
    one.selected = {2};
    const auto single = baseline_selective_match(stack, one);
    EXPECT_EQ(single.place, min_value_match(stack[2]).place);
    EXPECT_EQ(single.confidence, min_value_match(stack[2]).confidence);
  }
}

TEST(BaselineSelective, EnsembleOverSelectedSetsOnly) {
  // Set minima 1.00, 1.03, 5.0; gamma 0.04 keeps sets 0 and 1.
  const auto stack = oracle::to_stack({{1.00, 1.50, 2.0}, {1.60, 1.03, 2.0}, {9.0, 9.0, 5.0}});
  const auto sel = select_references(stack, 0.04);
  ASSERT_EQ(sel.selected, (std::vector<std::size_t>{0, 1}));
  const auto d = baseline_selective_match(stack, sel);
  // Sums over {0,1} are 2.60, 2.53, 4.0; over all three sets 11.6, 11.53, 9.0.
  EXPECT_EQ(*d.place, 1u);
  EXPECT_DOUBLE_EQ(d.confidence, -2.53 / 2);
  EXPECT_EQ(*min_ensemble_match(stack).place, 2u);
}

TEST(Baselines, ScaleAndMonotoneInvariance) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const auto a = oracle::random_distances(rng, 25), b = oracle::random_distances(rng, 25);
    auto ta = a;
    for (auto& v : ta) v = std::log1p(v) * 3;
    EXPECT_EQ(min_value_match({ta, 0}).place, min_value_match({a, 0}).place);
    auto sa = a, sb = b;
    for (auto& v : sa) v *= 17;
    for (auto& v : sb) v *= 17;
    EXPECT_EQ(min_ensemble_match(oracle::to_stack({sa, sb})).place, min_ensemble_match(oracle::to_stack({a, b})).place);
  }
}

TEST(Baselines, ConfidenceOrdersLikeObjective) {
  std::mt19937_64 rng(4);
  std::vector<std::pair<double, double>> pairs;  // (confidence, -objective)
  for (int q = 0; q < 100; ++q) {
    const auto stack = oracle::to_stack({oracle::random_distances(rng, 20), oracle::random_distances(rng, 20)});
    std::vector<double> s(20);
    for (std::size_t i = 0; i < 20; ++i) s[i] = stack[0][i] + stack[1][i];
    const double objective = *std::min_element(s.begin(), s.end()) / 2;
    pairs.emplace_back(min_ensemble_match(stack).confidence, objective);
  }
  for (const auto& [c, o] : pairs) EXPECT_DOUBLE_EQ(c, -o);
}

TEST(NegativeMeanDistance, RowMaximumIsConfidence) {
  const auto stack = oracle::to_stack({{0.5, 0.2, 0.4}, {0.1, 0.6, 0.3}});
  const auto row = negative_mean_distance(stack, {0, 1});
  EXPECT_DOUBLE_EQ(row[0], -0.3);
  EXPECT_EQ(*std::max_element(row.begin(), row.end()), min_ensemble_match(stack).confidence);
}
