#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vprfuse {

using DescriptorView = std::span<const float>;

/**
 * Row-major block of descriptors, one row per image. All rows share the
 * same dimension; storage is contiguous float32 to match the on-disk format.
 */
class DescriptorMatrix {
 public:
  DescriptorMatrix() = default;
  DescriptorMatrix(std::size_t rows, std::size_t dim);
  DescriptorMatrix(std::size_t rows, std::size_t dim, std::vector<float> values);

  // Builds from individual rows; throws DimensionMismatch on ragged input.
  static DescriptorMatrix from_rows(const std::vector<std::vector<float>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }
  bool empty() const { return rows_ == 0; }

  DescriptorView row(std::size_t i) const { return {values_.data() + i * dim_, dim_}; }
  std::span<float> row(std::size_t i) { return {values_.data() + i * dim_, dim_}; }

  const std::vector<float>& values() const { return values_; }
  std::vector<float>& values() { return values_; }

  // Throws ValidationError on the first NaN/Inf component.
  void validate_finite() const;

  bool operator==(const DescriptorMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<float> values_;
};

/// One descriptor per place, all captured under a single appearance condition.
struct ReferenceSet {
  std::size_t id = 0;  // zero-based position among the loaded reference sets
  std::string label;
  DescriptorMatrix descriptors;

  std::size_t places() const { return descriptors.rows(); }
  std::size_t dim() const { return descriptors.dim(); }
};

}  // namespace vprfuse
