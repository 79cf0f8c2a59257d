#include "vprfuse/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vprfuse/likelihood.hpp"

namespace vprfuse {

Prior::Prior(std::vector<double> probabilities) : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw ValidationError("prior: no places");
  double sum = 0.0;
  for (double p : probabilities_) {
    if (!std::isfinite(p) || p < 0) throw ValidationError("prior: entries must be finite and non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("prior: probabilities sum to " + std::to_string(sum));
}

Prior Prior::uniform(std::size_t places) {
  if (places == 0) throw ValidationError("prior: no places");
  return Prior(std::vector<double>(places, 1.0 / static_cast<double>(places)));
}

Prior Prior::one_hot(std::size_t places, std::size_t place) {
  if (place >= places) throw ValidationError("prior: place out of range");
  std::vector<double> p(places, 0.0);
  p[place] = 1.0;
  return Prior(std::move(p));
}

std::vector<double> normalize_log_scores(const std::vector<double>& log_scores) {
  const double top = *std::max_element(log_scores.begin(), log_scores.end());
  std::vector<double> out(log_scores.size());
  if (!std::isfinite(top)) throw NoInformation("posterior has no finite score");
  double sum = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::exp(log_scores[i] - top);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

Belief posterior(const DistanceStack& stack, const SelectionResult& selection, const Prior& prior) {
  check_stack(stack);
  const std::size_t n = stack.front().size();
  if (prior.size() != n) throw DimensionMismatch("posterior: prior length differs from place count");
  if (selection.selected.empty()) throw ValidationError("posterior: empty selection");

  Belief b;
  b.selection = selection;
  b.log_scores.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = prior.probabilities()[i];
    b.log_scores[i] = p > 0 ? std::log(p) : -std::numeric_limits<double>::infinity();
  }
  std::size_t used = 0;
  for (std::size_t u : selection.selected) {
    if (u >= stack.size()) throw ValidationError("posterior: selection refers to a missing reference set");
    std::vector<double> llr;
    try {
      llr = log_likelihood_ratio(stack[u]);
    } catch (const DegenerateReference&) {
      b.degenerate.push_back(u);
      continue;
    } catch (const InsufficientData&) {
      b.degenerate.push_back(u);
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) b.log_scores[i] += llr[i];
    ++used;
  }
  if (used == 0) throw NoInformation("posterior: every selected reference set is degenerate");
  b.normalized = normalize_log_scores(b.log_scores);
  return b;
}

Belief bayesian_full_fusion(const DistanceStack& stack, const Prior& prior) {
  return posterior(stack, select_all(stack), prior);
}

PlaceDecision decide(const std::vector<double>& normalized, double h) {
  PlaceDecision d;
  d.threshold = h;
  if (normalized.empty()) return d;
  const auto it = std::max_element(normalized.begin(), normalized.end());
  d.confidence = *it;
  if (*it > h) d.place = static_cast<std::size_t>(it - normalized.begin());
  return d;
}

PlaceDecision decide(const Belief& belief, double h) { return decide(belief.normalized, h); }

}  // namespace vprfuse
