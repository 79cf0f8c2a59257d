#include "vprfuse/synthetic.hpp"

#include <random>
#include <string>

#include "vprfuse/error.hpp"

namespace vprfuse {

SyntheticDataset generate_synthetic(const SyntheticParams& p) {
  if (p.places == 0) throw ValidationError("synthetic: need at least one place");
  if (p.conditions == 0) throw ValidationError("synthetic: need at least one condition");
  if (p.dim == 0) throw ValidationError("synthetic: dimension must be positive");
  if (p.sigma_place < 0 || p.sigma_condition < 0 || p.sigma_query < 0) {
    throw ValidationError("synthetic: noise scales must be non-negative");
  }
  if (p.queries > p.places) throw ValidationError("synthetic: more queries than places");

  std::vector<double> weights = p.mixture;
  if (weights.empty()) weights.assign(p.conditions, 1.0);
  if (weights.size() != p.conditions) {
    throw ValidationError("synthetic: mixture has " + std::to_string(weights.size()) + " weights for " +
                          std::to_string(p.conditions) + " conditions");
  }
  double total = 0;
  for (double w : weights) {
    if (!(w >= 0)) throw ValidationError("synthetic: mixture weights must be non-negative");
    total += w;
  }
  if (total <= 0) throw ValidationError("synthetic: mixture weights sum to zero");

  const std::size_t n = p.places, dim = p.dim, m = p.conditions;
  const std::size_t t = p.queries == 0 ? n : p.queries;

  std::mt19937_64 rng(p.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<double> latent(n * dim);
  for (auto& v : latent) v = p.sigma_place * normal(rng);
  std::vector<double> offset(m * n * dim);
  for (auto& v : offset) v = p.sigma_condition * normal(rng);

  SyntheticDataset out;
  out.dataset.references.resize(m);
  for (std::size_t u = 0; u < m; ++u) {
    auto& ref = out.dataset.references[u];
    ref.id = u;
    ref.label = "cond" + std::to_string(u);
    ref.descriptors = DescriptorMatrix(n, dim);
    auto& values = ref.descriptors.values();
    for (std::size_t k = 0; k < n * dim; ++k) {
      values[k] = static_cast<float>(latent[k] + offset[u * n * dim + k] + p.sigma_query * normal(rng));
    }
  }

  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  out.dataset.queries = DescriptorMatrix(t, dim);
  out.query_condition.resize(t);
  for (std::size_t j = 0; j < t; ++j) {
    const std::size_t w = pick(rng);
    out.query_condition[j] = w;
    auto row = out.dataset.queries.row(j);
    for (std::size_t k = 0; k < dim; ++k) {
      const std::size_t idx = j * dim + k;
      row[k] = static_cast<float>(latent[idx] + offset[w * n * dim + idx] + p.sigma_query * normal(rng));
    }
  }
  out.dataset.ground_truth = GroundTruth::identity(t, p.gt_tolerance);
  return out;
}

std::filesystem::path write_synthetic(const SyntheticDataset& synthetic, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto& ds = synthetic.dataset;
  DatasetManifest manifest;
  manifest.places = ds.places();
  manifest.dim = ds.dim();
  manifest.gt_tolerance = ds.ground_truth.tolerance;
  for (const auto& ref : ds.references) {
    const auto path = dir / ("ref_" + std::to_string(ref.id) + ".vprd");
    write_descriptor_file(path, ref.descriptors);
    manifest.references.push_back({ref.label, path});
  }
  manifest.query = dir / "query.vprd";
  write_descriptor_file(manifest.query, ds.queries);
  manifest.ground_truth = dir / "ground_truth.csv";
  write_ground_truth(*manifest.ground_truth, ds.ground_truth);
  const auto manifest_path = dir / "manifest.txt";
  write_manifest(manifest_path, manifest);
  return manifest_path;
}

}  // namespace vprfuse
