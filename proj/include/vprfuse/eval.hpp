#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace vprfuse {

struct EvalRecord {
  std::size_t query = 0;
  std::optional<std::size_t> place;  // nullopt = abstained
  double confidence = 0.0;
  bool correct = false;  // meaningful only when place is set
};

struct PRPoint {
  double threshold = 0.0;
  double recall = 0.0;
  double precision = 0.0;
};

struct PRCurve {
  std::vector<PRPoint> points;  // strictest threshold first
  double auc = 0.0;
};

// |decided - truth| <= tolerance
bool match_correct(std::size_t decided, std::size_t truth, std::size_t tolerance);

/**
 * Sweeps the confidence threshold over every distinct confidence of the
 * decided records, from the highest down. At threshold t a record counts as
 * decided when it has a place and confidence >= t. Precision is correct over
 * decided, recall is correct over all records (every query has a true match).
 * With no decided record the curve is the single point (recall 0, precision 0).
 */
PRCurve pr_curve(const std::vector<EvalRecord>& records);

// Trapezoidal area under precision(recall) on [0, max recall], with the curve
// extended to recall 0 at the precision of its first point.
double auc(const std::vector<PRPoint>& points);
inline double auc(const PRCurve& curve) { return auc(curve.points); }

}  // namespace vprfuse
