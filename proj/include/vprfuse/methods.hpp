#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vprfuse/baselines.hpp"
#include "vprfuse/distance.hpp"
#include "vprfuse/eval.hpp"
#include "vprfuse/io.hpp"
#include "vprfuse/selection.hpp"
#include "vprfuse/sequence.hpp"

namespace vprfuse {

enum class MethodKind {
  BayesSelective,     // selection + Bayesian fusion
  BayesFull,          // Bayesian fusion over every set
  BaselineFusion,     // minimum ensemble distance
  BaselineSelective,  // minimum ensemble distance over the selected sets
  MinValue,           // best match in one reference set
  BayesSingle,        // Bayesian posterior from one reference set
};

struct Method {
  MethodKind kind = MethodKind::BayesSelective;
  std::size_t reference = 0;  // for the single-reference kinds

  bool bayesian() const;
  bool single_reference() const;
  std::string name() const;
};

/**
 * The method registry. Accepted selectors are
 *   bayes-selective, bayes-full, baseline-fusion, baseline-selective,
 *   min-value:<u>, bayes-single:<u>
 * where <u> is a zero-based reference index or a reference label.
 */
Method parse_method(const std::string& selector, std::span<const std::string> reference_labels);
// "all" expands to every fusion method plus both single-reference methods for each set.
std::vector<Method> parse_methods(const std::vector<std::string>& selectors,
                                  std::span<const std::string> reference_labels);
std::vector<Method> all_methods(std::size_t reference_count);
std::vector<std::string> method_selectors();

struct QueryResult {
  ScoredDecision decision;      // place = argmax of scores unless the query carried no information
  std::vector<double> scores;   // native per-place score: posterior or negative mean distance
  std::size_t selected = 0;     // reference sets that contributed
  bool no_information = false;
};

struct MethodOptions {
  double gamma = kDefaultGamma;
};

// A query whose selected sets are all degenerate comes back with
// no_information set, no place and the uniform prior as its scores.
QueryResult run_method(const Method& method, const DistanceStack& stack, const MethodOptions& options = {});

struct EvalOptions {
  MethodOptions method;
  std::size_t seq_len = 1;
  double seq_velocity = 1.0;
  int jobs = 1;
};

struct MethodEvaluation {
  std::string method;
  std::vector<EvalRecord> records;
  PRCurve curve;
  std::size_t no_information = 0;
};

std::vector<EvalRecord> score_records(const std::vector<ScoredDecision>& decisions, const GroundTruth& gt);

// Per-query results for a method, computed over queries in parallel.
std::vector<QueryResult> run_queries(const Method& method, const std::vector<DistanceStack>& stacks,
                                     const MethodOptions& options, int jobs);

// Full sweep: per-query decisions, optional sequence aggregation, PR curve and AUC.
MethodEvaluation evaluate_method(const Method& method, const std::vector<DistanceStack>& stacks, const GroundTruth& gt,
                                 const EvalOptions& options);

// Decisions recovered from a score matrix through the aggregation path.
std::vector<ScoredDecision> sequence_decisions(const ScoreMatrix& aggregated, const std::string& method);

}  // namespace vprfuse
