#include "vprfuse/distance.hpp"

#include <cmath>
#include <string>

namespace vprfuse {

double euclidean_distance(DescriptorView a, DescriptorView b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("euclidean_distance: dimensions " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
  const float* pa = a.data();
  const float* pb = b.data();
  const std::size_t n = a.size();
  double acc = 0.0;
#pragma omp simd reduction(+ : acc)
  for (std::size_t k = 0; k < n; ++k) {
    const double d = static_cast<double>(pa[k]) - static_cast<double>(pb[k]);
    acc += d * d;
  }
  return std::sqrt(acc);
}

double Euclidean::operator()(DescriptorView a, DescriptorView b) const { return euclidean_distance(a, b); }

void check_reference_sets(std::span<const ReferenceSet> refs) {
  if (refs.empty()) throw ValidationError("no reference sets");
  for (const auto& ref : refs) {
    if (ref.places() != refs.front().places() || ref.dim() != refs.front().dim()) {
      throw ValidationError("reference sets disagree on place count or dimension ('" + ref.label + "')");
    }
  }
}

void check_stack(const DistanceStack& stack) {
  if (stack.empty()) throw ValidationError("empty distance stack");
  const std::size_t n = stack.front().size();
  if (n == 0) throw ValidationError("empty distance vector");
  for (const auto& d : stack) {
    if (d.size() != n) throw ValidationError("distance vectors in a stack must share their length");
    for (double v : d.values) {
      if (!std::isfinite(v) || v < 0) throw ValidationError("distances must be finite and non-negative");
    }
  }
}

}  // namespace vprfuse
