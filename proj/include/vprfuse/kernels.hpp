#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vprfuse/descriptor.hpp"
#include "vprfuse/distance.hpp"

// Data-parallel kernels. Each output element is produced by exactly one
// iteration with the same arithmetic as the serial path, so results are
// bit-identical for every thread count.
namespace vprfuse::kernels {

// jobs <= 0 uses the OpenMP default thread count.
std::vector<DistanceStack> batch_distance_stacks(const DescriptorMatrix& queries, std::span<const ReferenceSet> refs,
                                                 int jobs);

// Splits the places of a single reference set across threads.
DistanceVector distance_vector(DescriptorView query, const ReferenceSet& ref, int jobs);

int max_threads();

}  // namespace vprfuse::kernels

// Serial counterparts, kept as the reference for the parallel kernels.
namespace vprfuse::serial {

std::vector<DistanceStack> batch_distance_stacks(const DescriptorMatrix& queries, std::span<const ReferenceSet> refs);

}  // namespace vprfuse::serial
