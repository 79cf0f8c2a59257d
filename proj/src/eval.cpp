#include "vprfuse/eval.hpp"

#include <algorithm>
#include <numeric>

namespace vprfuse {

bool match_correct(std::size_t decided, std::size_t truth, std::size_t tolerance) {
  const std::size_t gap = decided > truth ? decided - truth : truth - decided;
  return gap <= tolerance;
}

PRCurve pr_curve(const std::vector<EvalRecord>& records) {
  PRCurve curve;
  const double total = static_cast<double>(records.size());
  std::vector<const EvalRecord*> decided;
  for (const auto& r : records) {
    if (r.place) decided.push_back(&r);
  }
  if (decided.empty() || records.empty()) {
    curve.points.push_back({0.0, 0.0, 0.0});
    curve.auc = 0.0;
    return curve;
  }
  std::stable_sort(decided.begin(), decided.end(),
                   [](const EvalRecord* a, const EvalRecord* b) { return a->confidence > b->confidence; });
  std::size_t correct = 0;
  for (std::size_t k = 0; k < decided.size(); ++k) {
    if (decided[k]->correct) ++correct;
    // Emit one point per distinct confidence, after its whole tie group.
    if (k + 1 < decided.size() && decided[k + 1]->confidence == decided[k]->confidence) continue;
    const double n_decided = static_cast<double>(k + 1);
    curve.points.push_back({decided[k]->confidence, static_cast<double>(correct) / total,
                            static_cast<double>(correct) / n_decided});
  }
  curve.auc = auc(curve.points);
  return curve;
}

double auc(const std::vector<PRPoint>& points) {
  if (points.empty()) return 0.0;
  // Runs of constant precision integrate as rectangles over their whole
  // recall span, so a flat curve gives its precision exactly.
  double area = 0.0;
  double run_start = 0.0;
  double prev_recall = 0.0;
  double prev_precision = points.front().precision;
  for (const auto& p : points) {
    if (p.precision != prev_precision) {
      area += prev_precision * (prev_recall - run_start);
      area += 0.5 * (prev_precision + p.precision) * (p.recall - prev_recall);
      run_start = p.recall;
    }
    prev_recall = p.recall;
    prev_precision = p.precision;
  }
  area += prev_precision * (prev_recall - run_start);
  return std::clamp(area, 0.0, 1.0);
}

}  // namespace vprfuse
