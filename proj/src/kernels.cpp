#include "vprfuse/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vprfuse {

namespace {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : kernels::max_threads(); }

void fill_stack(DescriptorView query, std::span<const ReferenceSet> refs, DistanceStack& stack) {
  stack.resize(refs.size());
  for (std::size_t u = 0; u < refs.size(); ++u) {
    auto& d = stack[u];
    d.source = u;
    d.values.resize(refs[u].places());
    for (std::size_t i = 0; i < refs[u].places(); ++i) d.values[i] = euclidean_distance(query, refs[u].descriptors.row(i));
  }
}

void check_batch(const DescriptorMatrix& queries, std::span<const ReferenceSet> refs) {
  check_reference_sets(refs);
  if (refs.front().places() == 0) throw ValidationError("empty reference set");
  if (queries.dim() != refs.front().dim()) throw DimensionMismatch("query and reference dimensions differ");
}

}  // namespace

namespace kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<DistanceStack> batch_distance_stacks(const DescriptorMatrix& queries, std::span<const ReferenceSet> refs,
                                                 int jobs) {
  check_batch(queries, refs);
  std::vector<DistanceStack> out(queries.rows());
  const auto t = static_cast<std::ptrdiff_t>(queries.rows());
#pragma omp parallel for schedule(dynamic, 8) num_threads(resolve_jobs(jobs))
  for (std::ptrdiff_t j = 0; j < t; ++j) fill_stack(queries.row(static_cast<std::size_t>(j)), refs, out[j]);
  return out;
}

DistanceVector distance_vector(DescriptorView query, const ReferenceSet& ref, int jobs) {
  if (ref.places() == 0) throw ValidationError("distance_vector: empty reference set");
  if (ref.dim() != query.size()) throw DimensionMismatch("distance_vector: query and reference dimensions differ");
  DistanceVector out;
  out.source = ref.id;
  out.values.resize(ref.places());
  const auto n = static_cast<std::ptrdiff_t>(ref.places());
#pragma omp parallel for schedule(static) num_threads(resolve_jobs(jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) out.values[i] = euclidean_distance(query, ref.descriptors.row(i));
  return out;
}

}  // namespace kernels

namespace serial {

std::vector<DistanceStack> batch_distance_stacks(const DescriptorMatrix& queries, std::span<const ReferenceSet> refs) {
  check_batch(queries, refs);
  std::vector<DistanceStack> out(queries.rows());
  for (std::size_t j = 0; j < queries.rows(); ++j) fill_stack(queries.row(j), refs, out[j]);
  return out;
}

}  // namespace serial

}  // namespace vprfuse
