#include "vprfuse/descriptor.hpp"

#include <cmath>
#include <string>

#include "vprfuse/error.hpp"

namespace vprfuse {

DescriptorMatrix::DescriptorMatrix(std::size_t rows, std::size_t dim)
    : rows_(rows), dim_(dim), values_(rows * dim, 0.0f) {}

DescriptorMatrix::DescriptorMatrix(std::size_t rows, std::size_t dim, std::vector<float> values)
    : rows_(rows), dim_(dim), values_(std::move(values)) {
  if (values_.size() != rows_ * dim_) throw DimensionMismatch("DescriptorMatrix: value count does not equal rows*dim");
}

DescriptorMatrix DescriptorMatrix::from_rows(const std::vector<std::vector<float>>& rows) {
  if (rows.empty()) return {};
  const std::size_t dim = rows.front().size();
  std::vector<float> values;
  values.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw DimensionMismatch("row " + std::to_string(i) + " has dimension " + std::to_string(rows[i].size()) +
                              ", expected " + std::to_string(dim));
    }
    values.insert(values.end(), rows[i].begin(), rows[i].end());
  }
  return {rows.size(), dim, std::move(values)};
}

void DescriptorMatrix::validate_finite() const {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw ValidationError("non-finite descriptor value at row " + std::to_string(k / dim_) + ", component " +
                            std::to_string(k % dim_));
    }
  }
}

}  // namespace vprfuse
