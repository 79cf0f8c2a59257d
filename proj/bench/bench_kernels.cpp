// Serial vs OpenMP comparison of the data-parallel paths: batch distance
// stacks and per-query method evaluation.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "vprfuse/kernels.hpp"
#include "vprfuse/methods.hpp"
#include "vprfuse/synthetic.hpp"

using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  vprfuse::SyntheticParams p;
  p.places = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2000;
  p.dim = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 512;
  p.conditions = 3;
  p.queries = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 200;
  const int jobs = argc > 4 ? std::atoi(argv[4]) : vprfuse::kernels::max_threads();
  const auto ds = vprfuse::generate_synthetic(p).dataset;

  std::printf("places=%zu dim=%zu queries=%zu jobs=%d\n", p.places, p.dim, ds.queries.rows(), jobs);
  std::printf("kernel,serial_s,parallel_s,speedup,identical\n");

  std::vector<vprfuse::DistanceStack> a, b;
  const double ts = best_of(3, [&] { a = vprfuse::serial::batch_distance_stacks(ds.queries, ds.references); });
  const double tp = best_of(3, [&] { b = vprfuse::kernels::batch_distance_stacks(ds.queries, ds.references, jobs); });
  bool same = a.size() == b.size();
  for (std::size_t j = 0; same && j < a.size(); ++j) {
    for (std::size_t u = 0; same && u < a[j].size(); ++u) same = a[j][u].values == b[j][u].values;
  }
  std::printf("distance_stacks,%.6f,%.6f,%.2f,%s\n", ts, tp, ts / tp, same ? "yes" : "no");

  const vprfuse::Method method{vprfuse::MethodKind::BayesSelective};
  std::vector<vprfuse::QueryResult> ra, rb;
  const double es = best_of(3, [&] { ra = vprfuse::run_queries(method, a, {}, 1); });
  const double ep = best_of(3, [&] { rb = vprfuse::run_queries(method, a, {}, jobs); });
  same = ra.size() == rb.size();
  for (std::size_t j = 0; same && j < ra.size(); ++j) same = ra[j].scores == rb[j].scores;
  std::printf("bayes_selective_queries,%.6f,%.6f,%.2f,%s\n", es, ep, es / ep, same ? "yes" : "no");
  return 0;
}
