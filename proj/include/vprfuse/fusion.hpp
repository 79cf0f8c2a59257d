#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vprfuse/distance.hpp"
#include "vprfuse/selection.hpp"

namespace vprfuse {

class Prior {
 public:
  // Throws ValidationError unless entries are >= 0, finite and sum to 1 within 1e-9.
  explicit Prior(std::vector<double> probabilities);

  static Prior uniform(std::size_t places);
  static Prior one_hot(std::size_t places, std::size_t place);

  std::size_t size() const { return probabilities_.size(); }
  const std::vector<double>& probabilities() const { return probabilities_; }

 private:
  std::vector<double> probabilities_;
};

struct Belief {
  std::vector<double> log_scores;  // unnormalised log posterior
  std::vector<double> normalized;  // sums to 1
  SelectionResult selection;
  std::vector<std::size_t> degenerate;  // selected sets skipped for sigma2 <= eps
};

struct PlaceDecision {
  std::optional<std::size_t> place;  // nullopt = no match
  double confidence = 0.0;           // max normalised belief
  double threshold = 0.0;

  bool matched() const { return place.has_value(); }
};

// exp(x - max x) normalised to sum 1. -inf entries map to 0.
std::vector<double> normalize_log_scores(const std::vector<double>& log_scores);

/**
 * Posterior over places from the selected reference sets:
 *
 *   log_scores[i] = sum_{u in S} llr_u[i] + log prior[i]
 *
 * Selected sets whose distances are degenerate are left out and listed in
 * Belief::degenerate. Throws NoInformation when every selected set is.
 */
Belief posterior(const DistanceStack& stack, const SelectionResult& selection, const Prior& prior);

// posterior with every reference set selected.
Belief bayesian_full_fusion(const DistanceStack& stack, const Prior& prior);

// Match at the argmax (lowest index on ties) iff its normalised belief > h.
PlaceDecision decide(const Belief& belief, double h);
PlaceDecision decide(const std::vector<double>& normalized, double h);

}  // namespace vprfuse
