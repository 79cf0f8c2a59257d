#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vprfuse/descriptor.hpp"

namespace vprfuse {

// Descriptor file layout (little-endian):
//   "VPRD" | u32 version | u32 rows | u32 dim | rows*dim float32, row-major
inline constexpr char kDescriptorMagic[4] = {'V', 'P', 'R', 'D'};
inline constexpr std::uint32_t kDescriptorVersion = 1;
inline constexpr std::size_t kDescriptorHeaderBytes = 16;

DescriptorMatrix read_descriptor_file(const std::filesystem::path& path);
void write_descriptor_file(const std::filesystem::path& path, const DescriptorMatrix& descriptors);

// In-memory codec used by the file functions; exposed for tests.
DescriptorMatrix decode_descriptors(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_descriptors(const DescriptorMatrix& descriptors);

struct GroundTruth {
  std::vector<std::size_t> true_place;  // indexed by query
  std::size_t tolerance = 0;            // in place indices

  std::size_t queries() const { return true_place.size(); }
  static GroundTruth identity(std::size_t queries, std::size_t tolerance);
};

// CSV with header "query_index,place_index", zero-based. Every query index
// 0..T-1 must appear exactly once.
GroundTruth read_ground_truth(const std::filesystem::path& path, std::size_t tolerance);
void write_ground_truth(const std::filesystem::path& path, const GroundTruth& gt);

struct ManifestReference {
  std::string label;
  std::filesystem::path path;
};

struct DatasetManifest {
  std::size_t places = 0;
  std::size_t dim = 0;
  std::filesystem::path query;
  std::size_t gt_tolerance = 0;
  std::vector<ManifestReference> references;
  // Optional "ground_truth = <csv>"; when absent query j maps to place j.
  std::optional<std::filesystem::path> ground_truth;
};

// Relative paths inside the manifest are resolved against its directory.
DatasetManifest parse_manifest(const std::string& text, const std::filesystem::path& base_dir);
DatasetManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);

struct Dataset {
  std::vector<ReferenceSet> references;
  DescriptorMatrix queries;
  GroundTruth ground_truth;

  std::size_t places() const { return references.empty() ? 0 : references.front().places(); }
  std::size_t dim() const { return queries.dim(); }
};

// Throws ValidationError when any file disagrees with the manifest's N/N_z,
// or when ground truth points outside 0..N-1.
void validate_dataset(const Dataset& dataset, std::size_t places, std::size_t dim);
Dataset load_dataset(const DatasetManifest& manifest);
Dataset load_dataset(const std::filesystem::path& manifest_path);

}  // namespace vprfuse
