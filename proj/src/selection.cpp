#include "vprfuse/selection.hpp"

#include <algorithm>
#include <cmath>

namespace vprfuse {

bool SelectionResult::contains(std::size_t u) const {
  return std::binary_search(selected.begin(), selected.end(), u);
}

std::vector<double> per_set_minima(const DistanceStack& stack) {
  if (stack.empty()) throw ValidationError("per_set_minima: empty stack");
  std::vector<double> minima;
  minima.reserve(stack.size());
  for (const auto& d : stack) {
    if (d.values.empty()) throw ValidationError("per_set_minima: empty distance vector");
    minima.push_back(*std::min_element(d.values.begin(), d.values.end()));
  }
  return minima;
}

namespace {

std::size_t argmin_first(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

std::size_t best_reference(const DistanceStack& stack) { return argmin_first(per_set_minima(stack)); }

SelectionResult select_references(const DistanceStack& stack, double gamma) {
  if (!(gamma > 0) || std::isnan(gamma)) throw ValidationError("select_references: gamma must be positive");
  SelectionResult r;
  r.gamma = gamma;
  r.minima = per_set_minima(stack);
  for (double m : r.minima) {
    if (!std::isfinite(m)) throw ValidationError("select_references: non-finite per-set minimum");
  }
  r.best = argmin_first(r.minima);
  const double best_min = r.minima[r.best];
  if (best_min == 0.0) {
    // Relative excess is undefined; take the limit: only zero minima qualify.
    r.zero_minimum = true;
    for (std::size_t u = 0; u < r.minima.size(); ++u) {
      if (r.minima[u] == 0.0) r.selected.push_back(u);
    }
    return r;
  }
  for (std::size_t u = 0; u < r.minima.size(); ++u) {
    if ((r.minima[u] - best_min) / best_min <= gamma) r.selected.push_back(u);
  }
  return r;
}

SelectionResult select_all(const DistanceStack& stack) {
  SelectionResult r;
  r.minima = per_set_minima(stack);
  r.best = argmin_first(r.minima);
  r.gamma = INFINITY;
  r.zero_minimum = r.minima[r.best] == 0.0;
  r.selected.resize(stack.size());
  for (std::size_t u = 0; u < stack.size(); ++u) r.selected[u] = u;
  return r;
}

}  // namespace vprfuse
