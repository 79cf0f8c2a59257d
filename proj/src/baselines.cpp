#include "vprfuse/baselines.hpp"

#include <algorithm>

namespace vprfuse {

namespace {

ScoredDecision argmin_decision(const std::vector<double>& values, double scale, std::string method) {
  const auto it = std::min_element(values.begin(), values.end());
  ScoredDecision d;
  d.place = static_cast<std::size_t>(it - values.begin());
  d.confidence = -(*it) / scale;
  d.method = std::move(method);
  return d;
}

std::vector<double> summed(const DistanceStack& stack, const std::vector<std::size_t>& sets) {
  check_stack(stack);
  if (sets.empty()) throw ValidationError("ensemble over no reference sets");
  std::vector<double> sum(stack.front().size(), 0.0);
  for (std::size_t u : sets) {
    if (u >= stack.size()) throw ValidationError("ensemble refers to a missing reference set");
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += stack[u].values[i];
  }
  return sum;
}

std::vector<std::size_t> every_set(const DistanceStack& stack) {
  std::vector<std::size_t> sets(stack.size());
  for (std::size_t u = 0; u < sets.size(); ++u) sets[u] = u;
  return sets;
}

}  // namespace

ScoredDecision min_value_match(const DistanceVector& d) {
  if (d.values.empty()) throw ValidationError("min_value_match: empty distance vector");
  return argmin_decision(d.values, 1.0, "min-value:" + std::to_string(d.source));
}

ScoredDecision min_ensemble_match(const DistanceStack& stack) {
  return argmin_decision(summed(stack, every_set(stack)), static_cast<double>(stack.size()), "baseline-fusion");
}

ScoredDecision baseline_selective_match(const DistanceStack& stack, const SelectionResult& selection) {
  return argmin_decision(summed(stack, selection.selected), static_cast<double>(selection.selected.size()),
                         "baseline-selective");
}

std::vector<double> negative_mean_distance(const DistanceStack& stack, const std::vector<std::size_t>& sets) {
  auto row = summed(stack, sets);
  const double scale = static_cast<double>(sets.size());
  for (double& v : row) v = -v / scale;
  return row;
}

}  // namespace vprfuse
