#include "vprfuse/bench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "vprfuse/error.hpp"
#include "vprfuse/fusion.hpp"
#include "vprfuse/kernels.hpp"

namespace vprfuse {

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) { return std::chrono::duration<double>(b - a).count(); }

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

SelectionResult selection_for(const Method& method, const DistanceStack& stack, const MethodOptions& options) {
  switch (method.kind) {
    case MethodKind::BayesSelective:
    case MethodKind::BaselineSelective:
      return select_references(stack, options.gamma);
    case MethodKind::BayesFull:
    case MethodKind::BaselineFusion:
      return select_all(stack);
    case MethodKind::MinValue:
    case MethodKind::BayesSingle: {
      auto s = select_all(stack);
      s.selected = {method.reference};
      return s;
    }
  }
  return select_all(stack);
}

// Returns a value derived from the decision so the work cannot be elided.
double fuse(const Method& method, const DistanceStack& stack, const SelectionResult& selection) {
  if (method.bayesian()) {
    try {
      const Belief b = posterior(stack, selection, Prior::uniform(stack.front().size()));
      return decide(b, 0.5).confidence;
    } catch (const NoInformation&) {
      return 0.0;
    }
  }
  if (method.kind == MethodKind::MinValue) return min_value_match(stack[method.reference]).confidence;
  return baseline_selective_match(stack, selection).confidence;
}

std::size_t query_count(const Dataset& dataset, const BenchOptions& options) {
  const std::size_t t = dataset.queries.rows();
  return options.max_queries == 0 ? t : std::min(t, options.max_queries);
}

volatile double g_sink = 0.0;

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

const PhaseTiming& BenchReport::phase(const std::string& name) const {
  for (const auto& p : phases) {
    if (p.phase == name) return p;
  }
  throw ValidationError("bench report has no phase '" + name + "'");
}

BenchReport bench_query(const Dataset& dataset, const Method& method, const BenchOptions& options) {
  check_reference_sets(dataset.references);
  const std::size_t t = query_count(dataset, options);
  if (t == 0) throw ValidationError("bench_query: no queries");
  const std::size_t reps = std::max<std::size_t>(options.repetitions, 1);

  std::vector<double> dist, sel, fus, total;
  double selected = 0.0;
  double sink = 0.0;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    for (std::size_t j = 0; j < t; ++j) {
      const auto t0 = Clock::now();
      const DistanceStack stack = distance_stack(dataset.queries.row(j), dataset.references);
      const auto t1 = Clock::now();
      const SelectionResult selection = selection_for(method, stack, options.method);
      const auto t2 = Clock::now();
      sink += fuse(method, stack, selection);
      const auto t3 = Clock::now();
      dist.push_back(seconds(t0, t1));
      sel.push_back(seconds(t1, t2));
      fus.push_back(seconds(t2, t3));
      total.push_back(seconds(t0, t3));
      selected += static_cast<double>(selection.selected.size());
    }
  }
  g_sink = sink;

  BenchReport report;
  report.method = method.name();
  report.samples = total.size();
  report.mean_selected = selected / static_cast<double>(report.samples);
  report.phases = {{"distance", mean(dist), median(dist)},
                   {"selection", mean(sel), median(sel)},
                   {"fusion", mean(fus), median(fus)},
                   {"total", mean(total), median(total)}};
  return report;
}

BenchReport bench_batch(const Dataset& dataset, const Method& method, const BenchOptions& options, int jobs) {
  const std::size_t t = query_count(dataset, options);
  if (t == 0) throw ValidationError("bench_batch: no queries");
  DescriptorMatrix queries(t, dataset.dim(),
                           std::vector<float>(dataset.queries.values().begin(),
                                              dataset.queries.values().begin() + static_cast<std::ptrdiff_t>(t * dataset.dim())));
  const std::size_t reps = std::max<std::size_t>(options.repetitions, 1);
  std::vector<double> per_query;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    const auto t0 = Clock::now();
    const auto stacks = kernels::batch_distance_stacks(queries, dataset.references, jobs);
    const auto results = run_queries(method, stacks, options.method, jobs);
    const auto t1 = Clock::now();
    g_sink = results.front().decision.confidence;
    per_query.push_back(seconds(t0, t1) / static_cast<double>(t));
  }
  BenchReport report;
  report.method = method.name();
  report.samples = per_query.size();
  report.phases = {{"total-parallel", mean(per_query), median(per_query)}};
  return report;
}

}  // namespace vprfuse
