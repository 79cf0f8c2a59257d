#include "vprfuse/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vprfuse {

MatchCounts place_match_counts(const std::vector<double>& distances) {
  if (distances.empty()) throw ValidationError("place_match_counts: empty distance vector");
  std::vector<double> sorted(distances);
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<std::uint32_t>(distances.size());
  MatchCounts counts(distances.size());
  for (std::size_t i = 0; i < distances.size(); ++i) {
    // Entries strictly below D_i are the only ones not counted.
    const auto below = std::lower_bound(sorted.begin(), sorted.end(), distances[i]) - sorted.begin();
    counts[i] = n - static_cast<std::uint32_t>(below);
  }
  return counts;
}

GaussianParams gaussian_params(const std::vector<double>& distances) {
  if (distances.size() < 2) {
    throw InsufficientData("gaussian_params: need at least 2 distances, got " + std::to_string(distances.size()));
  }
  const double n = static_cast<double>(distances.size());
  double sum = 0.0;
  for (double d : distances) sum += d;
  GaussianParams g;
  g.mu = sum / n;
  double sq = 0.0;
  for (double d : distances) sq += (d - g.mu) * (d - g.mu);
  g.sigma2 = sq / n;
  return g;
}

double normal_logpdf(double x, double mu, double sigma2) {
  const double z = x - mu;
  return -0.5 * std::log(2.0 * std::numbers::pi * sigma2) - z * z / (2.0 * sigma2);
}

std::vector<double> log_likelihood_ratio(const DistanceVector& d) {
  const GaussianParams g = gaussian_params(d.values);
  if (g.sigma2 <= kDegenerateVariance) {
    throw DegenerateReference("reference set " + std::to_string(d.source) + ": distance variance " +
                              std::to_string(g.sigma2) + " is degenerate");
  }
  const MatchCounts counts = place_match_counts(d.values);
  std::vector<double> llr(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    llr[i] = std::log(static_cast<double>(counts[i])) - normal_logpdf(d.values[i], g.mu, g.sigma2);
  }
  return llr;
}

}  // namespace vprfuse
