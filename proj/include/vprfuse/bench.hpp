#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vprfuse/io.hpp"
#include "vprfuse/methods.hpp"

namespace vprfuse {

struct PhaseTiming {
  std::string phase;  // distance, selection, fusion, total
  double mean_s = 0.0;
  double median_s = 0.0;
};

struct BenchReport {
  std::string method;
  std::vector<PhaseTiming> phases;
  double mean_selected = 0.0;  // average |S|
  std::size_t samples = 0;

  const PhaseTiming& phase(const std::string& name) const;
};

struct BenchOptions {
  std::size_t repetitions = 3;
  std::size_t max_queries = 0;  // 0 = every query
  MethodOptions method;
};

/**
 * Single-threaded per-query wall clock with the dataset resident in memory.
 * Each sample is one query: distances to every reference set, reference
 * selection, then fusion and decision.
 */
BenchReport bench_query(const Dataset& dataset, const Method& method, const BenchOptions& options);

// Opt-in parallel throughput mode: wall time of the whole batch divided by
// the number of queries, phase "total-parallel".
BenchReport bench_batch(const Dataset& dataset, const Method& method, const BenchOptions& options, int jobs);

double median(std::vector<double> values);

}  // namespace vprfuse
