#include <gtest/gtest.h>

#include <random>

#include "vprfuse/sequence.hpp"

using namespace vprfuse;

namespace {

ScoreMatrix random_matrix(std::mt19937_64& rng, std::size_t t, std::size_t n) {
  std::uniform_real_distribution<double> u(-1, 1);
  ScoreMatrix m(t, n, "x");
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t i = 0; i < n; ++i) m.at(r, i) = u(rng);
  return m;
}

}  // namespace

TEST(SequenceAggregate, LengthOneIsIdentity) {
  std::mt19937_64 rng(1);
  const auto m = random_matrix(rng, 12, 9);
  EXPECT_EQ(sequence_aggregate(m, 1, 1.0), m);
  EXPECT_EQ(sequence_aggregate(m, 1, 2.7), m);
}

TEST(SequenceAggregate, ConstantStaysConstant) {
  ScoreMatrix m(6, 5);
  for (std::size_t t = 0; t < 6; ++t)
    for (std::size_t i = 0; i < 5; ++i) m.at(t, i) = 0.37;
  const auto out = sequence_aggregate(m, 4, 1.0);
  for (std::size_t t = 0; t < 6; ++t)
    for (std::size_t i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(out.at(t, i), 0.37);
}

TEST(SequenceAggregate, HandWindow) {
  ScoreMatrix m(3, 3);
  const double r[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t i = 0; i < 3; ++i) m.at(t, i) = r[t][i];
  const auto out = sequence_aggregate(m, 2, 1.0);
  EXPECT_DOUBLE_EQ(out.at(2, 0), 7.0);  // r1[-1] is out of range
  EXPECT_DOUBLE_EQ(out.at(2, 1), (8.0 + 4.0) / 2);
  EXPECT_DOUBLE_EQ(out.at(2, 2), (9.0 + 5.0) / 2);
  EXPECT_DOUBLE_EQ(out.at(0, 1), 2.0);  // no earlier query
}

TEST(SequenceAggregate, VelocityShiftsTheDiagonal) {
  ScoreMatrix m(3, 8);
  m.at(0, 0) = 1.0;
  m.at(1, 2) = 1.0;
  m.at(2, 4) = 1.0;
  const auto out = sequence_aggregate(m, 3, 2.0);
  EXPECT_DOUBLE_EQ(out.at(2, 4), 1.0);
  EXPECT_EQ(*sequence_decide(out.row(2)).place, 4u);
}

TEST(SequenceAggregate, CommutesWithConstantShift) {
  std::mt19937_64 rng(2);
  const auto m = random_matrix(rng, 20, 15);
  auto shifted = m;
  for (std::size_t t = 0; t < 20; ++t)
    for (std::size_t i = 0; i < 15; ++i) shifted.at(t, i) += 4.0;
  const auto a = sequence_aggregate(m, 5, 1.0), b = sequence_aggregate(shifted, 5, 1.0);
  for (std::size_t t = 0; t < 20; ++t) {
    EXPECT_EQ(sequence_decide(a.row(t)).place, sequence_decide(b.row(t)).place);
    for (std::size_t i = 0; i < 15; ++i) EXPECT_NEAR(b.at(t, i), a.at(t, i) + 4.0, 1e-12);
  }
}

TEST(SequenceAggregate, Errors) {
  ScoreMatrix m(3, 3);
  EXPECT_THROW(sequence_aggregate(ScoreMatrix{}, 1), ValidationError);
  EXPECT_THROW(sequence_aggregate(m, 0), ValidationError);
  EXPECT_THROW(sequence_aggregate(m, 4), ValidationError);
  EXPECT_THROW(sequence_aggregate(m, 2, 0.0), ValidationError);
}

TEST(SequenceDecide, ArgmaxConventions) {
  const std::vector<double> peak{0.1, 0.2, 0.9, 0.3};
  EXPECT_EQ(*sequence_decide(peak).place, 2u);
  EXPECT_EQ(sequence_decide(peak).confidence, 0.9);
  const std::vector<double> flat(4, 0.25);
  EXPECT_EQ(*sequence_decide(flat).place, 0u);
  EXPECT_FALSE(sequence_decide(flat, 0.25).matched());
  EXPECT_TRUE(sequence_decide(flat, 0.2).matched());

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> row(30);
    for (auto& v : row) v = u(rng);
    std::size_t best = 0;
    for (std::size_t i = 1; i < row.size(); ++i)
      if (row[i] > row[best]) best = i;
    EXPECT_EQ(*sequence_decide(row).place, best);
  }
}
