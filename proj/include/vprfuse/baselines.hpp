#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vprfuse/distance.hpp"
#include "vprfuse/selection.hpp"

namespace vprfuse {

// Place plus a confidence that is only comparable within one method.
struct ScoredDecision {
  std::optional<std::size_t> place;
  double confidence = 0.0;
  std::string method;
};

// argmin D, confidence -min D.
ScoredDecision min_value_match(const DistanceVector& d);

// argmin_i sum_u D_i^u, confidence -(min sum) / M.
ScoredDecision min_ensemble_match(const DistanceStack& stack);

// min_ensemble_match over the sets in selection.selected only, with the
// confidence averaged over |S|.
ScoredDecision baseline_selective_match(const DistanceStack& stack, const SelectionResult& selection);

// Per-place negative mean distance over the given sets; the native score row
// of the distance-based methods.
std::vector<double> negative_mean_distance(const DistanceStack& stack, const std::vector<std::size_t>& sets);

}  // namespace vprfuse
