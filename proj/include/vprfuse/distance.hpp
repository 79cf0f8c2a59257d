#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "vprfuse/descriptor.hpp"
#include "vprfuse/error.hpp"

namespace vprfuse {

// Distances from one query to every place of one reference set.
struct DistanceVector {
  std::vector<double> values;
  std::size_t source = 0;  // reference-set index

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

// One DistanceVector per reference set, ordered by reference-set index.
using DistanceStack = std::vector<DistanceVector>;

template <typename M>
concept DistanceMetric = requires(const M& metric, DescriptorView a, DescriptorView b) {
  { metric(a, b) } -> std::convertible_to<double>;
};

/// Euclidean distance, accumulated in double regardless of the float32 input.
struct Euclidean {
  double operator()(DescriptorView a, DescriptorView b) const;
};

double euclidean_distance(DescriptorView a, DescriptorView b);

template <DistanceMetric Metric = Euclidean>
DistanceVector distance_vector(DescriptorView query, const ReferenceSet& ref, const Metric& metric = {}) {
  if (ref.places() == 0) throw ValidationError("distance_vector: empty reference set");
  if (ref.dim() != query.size()) throw DimensionMismatch("distance_vector: query and reference dimensions differ");
  DistanceVector out;
  out.source = ref.id;
  out.values.resize(ref.places());
  for (std::size_t i = 0; i < ref.places(); ++i) out.values[i] = metric(query, ref.descriptors.row(i));
  return out;
}

// Throws ValidationError when the sets disagree on place count or dimension.
void check_reference_sets(std::span<const ReferenceSet> refs);

template <DistanceMetric Metric = Euclidean>
DistanceStack distance_stack(DescriptorView query, std::span<const ReferenceSet> refs, const Metric& metric = {}) {
  check_reference_sets(refs);
  DistanceStack stack;
  stack.reserve(refs.size());
  for (std::size_t u = 0; u < refs.size(); ++u) {
    stack.push_back(distance_vector(query, refs[u], metric));
    stack.back().source = u;
  }
  return stack;
}

// Validates a stack: non-empty, uniform length, finite and non-negative.
void check_stack(const DistanceStack& stack);

}  // namespace vprfuse
