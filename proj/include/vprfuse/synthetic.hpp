#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "vprfuse/io.hpp"

namespace vprfuse {

/**
 * Additive-Gaussian multi-condition dataset.
 *
 * Every place i has a latent appearance l_i ~ N(0, sigma_place^2 I). Condition
 * u changes the look of place i by a fixed offset o_{u,i} ~ N(0, sigma_condition^2 I).
 * Reference descriptors are l_i + o_{u,i} + n with n ~ N(0, sigma_query^2 I).
 * Query j shows place j under a condition w drawn from `mixture`:
 * l_j + o_{w,j} + n'. Queries from a condition are therefore close only to
 * that condition's reference. Solvable instances want
 * sigma_place > sigma_condition + sigma_query.
 */
struct SyntheticParams {
  std::uint64_t seed = 7;
  std::size_t places = 500;
  std::size_t conditions = 3;
  std::size_t dim = 10;
  double sigma_place = 1.0;
  double sigma_condition = 0.9;
  double sigma_query = 0.3;
  // One weight per condition; empty means uniform. Need not sum to 1.
  std::vector<double> mixture;
  // Number of queries (the first `queries` places); 0 means all places.
  std::size_t queries = 0;
  std::size_t gt_tolerance = 0;
};

struct SyntheticDataset {
  Dataset dataset;
  std::vector<std::size_t> query_condition;  // condition each query was drawn from
};

SyntheticDataset generate_synthetic(const SyntheticParams& params);

// Writes ref_<u>.vprd, query.vprd, ground_truth.csv and manifest.txt into dir.
// Returns the manifest path.
std::filesystem::path write_synthetic(const SyntheticDataset& synthetic, const std::filesystem::path& dir);

}  // namespace vprfuse
