#include "vprfuse/sequence.hpp"

#include <algorithm>
#include <cmath>

#include "vprfuse/error.hpp"

namespace vprfuse {

ScoreMatrix::ScoreMatrix(std::size_t queries, std::size_t places, std::string method)
    : queries_(queries), places_(places), method_(std::move(method)), values_(queries * places, 0.0) {}

ScoreMatrix sequence_aggregate(const ScoreMatrix& matrix, std::size_t length, double velocity) {
  if (matrix.queries() == 0 || matrix.places() == 0) throw ValidationError("sequence_aggregate: empty score matrix");
  if (length == 0) throw ValidationError("sequence_aggregate: sequence length must be >= 1");
  if (length > matrix.queries()) throw ValidationError("sequence_aggregate: sequence length exceeds query count");
  if (!(velocity > 0) || !std::isfinite(velocity)) throw ValidationError("sequence_aggregate: velocity must be positive");

  const auto places = static_cast<std::ptrdiff_t>(matrix.places());
  std::vector<std::ptrdiff_t> shift(length);
  for (std::size_t k = 0; k < length; ++k) shift[k] = static_cast<std::ptrdiff_t>(std::llround(velocity * static_cast<double>(k)));

  ScoreMatrix out(matrix.queries(), matrix.places(), matrix.method());
  const auto queries = static_cast<std::ptrdiff_t>(matrix.queries());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < queries; ++t) {
    const std::size_t window = std::min<std::size_t>(length, static_cast<std::size_t>(t) + 1);
    for (std::ptrdiff_t i = 0; i < places; ++i) {
      double sum = 0.0;
      std::size_t terms = 0;
      for (std::size_t k = 0; k < window; ++k) {
        const std::ptrdiff_t place = i - shift[k];
        if (place < 0 || place >= places) continue;
        sum += matrix.at(static_cast<std::size_t>(t) - k, static_cast<std::size_t>(place));
        ++terms;
      }
      // k = 0 always lands in range, so terms >= 1.
      out.at(static_cast<std::size_t>(t), static_cast<std::size_t>(i)) = sum / static_cast<double>(terms);
    }
  }
  return out;
}

ScoredDecision sequence_decide(std::span<const double> row, const std::string& method) {
  ScoredDecision d;
  d.method = method;
  if (row.empty()) return d;
  const auto it = std::max_element(row.begin(), row.end());
  d.place = static_cast<std::size_t>(it - row.begin());
  d.confidence = *it;
  return d;
}

PlaceDecision sequence_decide(std::span<const double> row, double h) {
  return decide(std::vector<double>(row.begin(), row.end()), h);
}

}  // namespace vprfuse
