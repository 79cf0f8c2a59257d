#pragma once

#include <cstddef>
#include <vector>

#include "vprfuse/distance.hpp"

namespace vprfuse {

inline constexpr double kDefaultGamma = 0.04;

struct SelectionResult {
  std::size_t best = 0;               // u*, the set holding the overall minimum distance
  std::vector<std::size_t> selected;  // ascending reference-set indices, always contains best
  double gamma = kDefaultGamma;
  std::vector<double> minima;  // min_i D_i^u for every set u
  // Set when the best minimum is exactly zero; selected then holds the sets
  // whose minimum is also zero.
  bool zero_minimum = false;

  bool contains(std::size_t u) const;
};

std::vector<double> per_set_minima(const DistanceStack& stack);

// argmin over sets of the per-set minimum; ties go to the lowest index.
std::size_t best_reference(const DistanceStack& stack);

/**
 * Keeps every reference set whose minimum distance exceeds the best set's
 * minimum by at most a relative fraction gamma:
 *
 *   (min_i D_i^u - min_i D_i^{u*}) / min_i D_i^{u*} <= gamma
 *
 * The ratio makes the result invariant to a uniform rescaling of the stack.
 */
SelectionResult select_references(const DistanceStack& stack, double gamma = kDefaultGamma);

// S = every set; used by the full-fusion ablation.
SelectionResult select_all(const DistanceStack& stack);

}  // namespace vprfuse
