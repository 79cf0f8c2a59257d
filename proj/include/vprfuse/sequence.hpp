#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vprfuse/baselines.hpp"
#include "vprfuse/fusion.hpp"

namespace vprfuse {

// T x N per-place scores, higher is better, rows in temporal query order.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t queries, std::size_t places, std::string method = {});

  std::size_t queries() const { return queries_; }
  std::size_t places() const { return places_; }
  const std::string& method() const { return method_; }

  double& at(std::size_t t, std::size_t i) { return values_[t * places_ + i]; }
  double at(std::size_t t, std::size_t i) const { return values_[t * places_ + i]; }
  std::span<const double> row(std::size_t t) const { return {values_.data() + t * places_, places_}; }
  std::span<double> row(std::size_t t) { return {values_.data() + t * places_, places_}; }

  bool operator==(const ScoreMatrix&) const = default;

 private:
  std::size_t queries_ = 0;
  std::size_t places_ = 0;
  std::string method_;
  std::vector<double> values_;
};

/**
 * Trailing-window sequence aggregation along a straight-line trajectory:
 *
 *   out(t, i) = mean_{k=0..L-1} in(t - k, i - round(v k))
 *
 * Terms falling outside the matrix are skipped and the mean is taken over
 * the remaining ones, so early queries and border places still get scores.
 * Throws ValidationError for an empty matrix, L == 0, L > T or v <= 0.
 */
ScoreMatrix sequence_aggregate(const ScoreMatrix& matrix, std::size_t length, double velocity = 1.0);

// Argmax of an aggregated row (lowest index on ties), confidence = row max.
ScoredDecision sequence_decide(std::span<const double> row, const std::string& method = {});
// Bayesian convention: Match iff the row max exceeds h.
PlaceDecision sequence_decide(std::span<const double> row, double h);

}  // namespace vprfuse
