#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vprfuse/distance.hpp"

namespace vprfuse {

// Variances at or below this are treated as carrying no information.
inline constexpr double kDegenerateVariance = 1e-12;

// counts[i] = #{ j : D_i <= D_j }. In [1, N]; ties count on both sides.
using MatchCounts = std::vector<std::uint32_t>;

struct GaussianParams {
  double mu = 0.0;
  double sigma2 = 0.0;  // population variance
};

// Rank-count place-match model, O(N log N) via a sorted copy.
MatchCounts place_match_counts(const std::vector<double>& distances);
inline MatchCounts place_match_counts(const DistanceVector& d) { return place_match_counts(d.values); }

// Mean and population variance (divide by N) of the entries; needs N >= 2.
GaussianParams gaussian_params(const std::vector<double>& distances);
inline GaussianParams gaussian_params(const DistanceVector& d) { return gaussian_params(d.values); }

double normal_logpdf(double x, double mu, double sigma2);

/**
 * Single-reference log likelihood ratio of every place,
 *
 *   llr[i] = log counts[i] - log N(D_i; mu, sigma2)
 *
 * i.e. the place-match model over the Gaussian non-place-match model fitted
 * to the whole vector (true-match entry included). Constants common to all
 * places are dropped; the posterior normalises them away.
 *
 * Throws InsufficientData for N < 2 and DegenerateReference when
 * sigma2 <= kDegenerateVariance.
 */
std::vector<double> log_likelihood_ratio(const DistanceVector& d);

}  // namespace vprfuse
