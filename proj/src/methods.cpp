#include "vprfuse/methods.hpp"

#include <charconv>

#include "vprfuse/error.hpp"
#include "vprfuse/fusion.hpp"

namespace vprfuse {

bool Method::bayesian() const {
  return kind == MethodKind::BayesSelective || kind == MethodKind::BayesFull || kind == MethodKind::BayesSingle;
}

bool Method::single_reference() const { return kind == MethodKind::MinValue || kind == MethodKind::BayesSingle; }

std::string Method::name() const {
  switch (kind) {
    case MethodKind::BayesSelective: return "bayes-selective";
    case MethodKind::BayesFull: return "bayes-full";
    case MethodKind::BaselineFusion: return "baseline-fusion";
    case MethodKind::BaselineSelective: return "baseline-selective";
    case MethodKind::MinValue: return "min-value:" + std::to_string(reference);
    case MethodKind::BayesSingle: return "bayes-single:" + std::to_string(reference);
  }
  return "unknown";
}

std::vector<std::string> method_selectors() {
  return {"bayes-selective", "bayes-full", "baseline-fusion", "baseline-selective", "min-value:<u>", "bayes-single:<u>"};
}

namespace {

std::size_t parse_reference(const std::string& text, std::span<const std::string> labels) {
  for (std::size_t u = 0; u < labels.size(); ++u) {
    if (labels[u] == text) return u;
  }
  std::size_t u = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, u);
  if (text.empty() || ec != std::errc{} || ptr != end) throw ValidationError("unknown reference set '" + text + "'");
  if (u >= labels.size()) {
    throw ValidationError("reference index " + text + " out of range (" + std::to_string(labels.size()) + " sets)");
  }
  return u;
}

}  // namespace

Method parse_method(const std::string& selector, std::span<const std::string> labels) {
  if (selector == "bayes-selective") return {MethodKind::BayesSelective};
  if (selector == "bayes-full") return {MethodKind::BayesFull};
  if (selector == "baseline-fusion") return {MethodKind::BaselineFusion};
  if (selector == "baseline-selective") return {MethodKind::BaselineSelective};
  const auto colon = selector.find(':');
  if (colon != std::string::npos) {
    const std::string head = selector.substr(0, colon);
    const std::string arg = selector.substr(colon + 1);
    if (head == "min-value") return {MethodKind::MinValue, parse_reference(arg, labels)};
    if (head == "bayes-single") return {MethodKind::BayesSingle, parse_reference(arg, labels)};
  }
  throw ValidationError("unknown method '" + selector + "'");
}

std::vector<Method> all_methods(std::size_t reference_count) {
  std::vector<Method> out = {{MethodKind::BayesSelective},
                             {MethodKind::BayesFull},
                             {MethodKind::BaselineFusion},
                             {MethodKind::BaselineSelective}};
  for (std::size_t u = 0; u < reference_count; ++u) out.push_back({MethodKind::BayesSingle, u});
  for (std::size_t u = 0; u < reference_count; ++u) out.push_back({MethodKind::MinValue, u});
  return out;
}

std::vector<Method> parse_methods(const std::vector<std::string>& selectors, std::span<const std::string> labels) {
  std::vector<Method> out;
  for (const auto& s : selectors) {
    if (s == "all") {
      auto all = all_methods(labels.size());
      out.insert(out.end(), all.begin(), all.end());
    } else {
      out.push_back(parse_method(s, labels));
    }
  }
  return out;
}

namespace {

SelectionResult single_selection(const DistanceStack& stack, std::size_t u) {
  if (u >= stack.size()) throw ValidationError("single-reference method refers to a missing reference set");
  SelectionResult s = select_all(stack);
  s.selected = {u};
  return s;
}

QueryResult bayes_result(const DistanceStack& stack, const SelectionResult& selection, const std::string& name) {
  QueryResult r;
  const Prior prior = Prior::uniform(stack.front().size());
  try {
    Belief b = posterior(stack, selection, prior);
    r.selected = selection.selected.size() - b.degenerate.size();
    r.scores = std::move(b.normalized);
    r.decision = sequence_decide(r.scores, name);
  } catch (const NoInformation&) {
    r.no_information = true;
    r.scores = prior.probabilities();
    r.decision.method = name;
    r.decision.confidence = 0.0;
  }
  return r;
}

QueryResult distance_result(const DistanceStack& stack, const std::vector<std::size_t>& sets, ScoredDecision decision) {
  QueryResult r;
  r.selected = sets.size();
  r.scores = negative_mean_distance(stack, sets);
  r.decision = std::move(decision);
  return r;
}

}  // namespace

QueryResult run_method(const Method& method, const DistanceStack& stack, const MethodOptions& options) {
  check_stack(stack);
  const std::string name = method.name();
  switch (method.kind) {
    case MethodKind::BayesSelective:
      return bayes_result(stack, select_references(stack, options.gamma), name);
    case MethodKind::BayesFull:
      return bayes_result(stack, select_all(stack), name);
    case MethodKind::BayesSingle:
      return bayes_result(stack, single_selection(stack, method.reference), name);
    case MethodKind::BaselineFusion: {
      const auto all = select_all(stack);
      auto d = min_ensemble_match(stack);
      return distance_result(stack, all.selected, std::move(d));
    }
    case MethodKind::BaselineSelective: {
      const auto selection = select_references(stack, options.gamma);
      auto d = baseline_selective_match(stack, selection);
      return distance_result(stack, selection.selected, std::move(d));
    }
    case MethodKind::MinValue: {
      const auto selection = single_selection(stack, method.reference);
      auto d = min_value_match(stack[method.reference]);
      d.method = name;
      return distance_result(stack, selection.selected, std::move(d));
    }
  }
  throw ValidationError("unhandled method");
}

std::vector<QueryResult> run_queries(const Method& method, const std::vector<DistanceStack>& stacks,
                                     const MethodOptions& options, int jobs) {
  std::vector<QueryResult> out(stacks.size());
  const auto t = static_cast<std::ptrdiff_t>(stacks.size());
  const int threads = jobs > 0 ? jobs : 1;
  // Exceptions cannot cross the parallel region; keep the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::ptrdiff_t j = 0; j < t; ++j) {
    try {
      out[j] = run_method(method, stacks[j], options);
    } catch (...) {
#pragma omp critical(vprfuse_run_queries)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<EvalRecord> score_records(const std::vector<ScoredDecision>& decisions, const GroundTruth& gt) {
  if (decisions.size() != gt.queries()) throw ValidationError("decision count differs from ground-truth query count");
  std::vector<EvalRecord> records(decisions.size());
  for (std::size_t j = 0; j < decisions.size(); ++j) {
    records[j].query = j;
    records[j].place = decisions[j].place;
    records[j].confidence = decisions[j].confidence;
    records[j].correct = decisions[j].place && match_correct(*decisions[j].place, gt.true_place[j], gt.tolerance);
  }
  return records;
}

std::vector<ScoredDecision> sequence_decisions(const ScoreMatrix& aggregated, const std::string& method) {
  std::vector<ScoredDecision> out(aggregated.queries());
  for (std::size_t t = 0; t < aggregated.queries(); ++t) out[t] = sequence_decide(aggregated.row(t), method);
  return out;
}

MethodEvaluation evaluate_method(const Method& method, const std::vector<DistanceStack>& stacks, const GroundTruth& gt,
                                 const EvalOptions& options) {
  if (stacks.empty()) throw ValidationError("evaluate_method: no queries");
  MethodEvaluation ev;
  ev.method = method.name();
  auto results = run_queries(method, stacks, options.method, options.jobs);
  for (const auto& r : results) ev.no_information += r.no_information ? 1 : 0;

  std::vector<ScoredDecision> decisions;
  if (options.seq_len > 1) {
    ScoreMatrix matrix(results.size(), stacks.front().front().size(), ev.method);
    for (std::size_t t = 0; t < results.size(); ++t) {
      std::copy(results[t].scores.begin(), results[t].scores.end(), matrix.row(t).begin());
    }
    decisions = sequence_decisions(sequence_aggregate(matrix, options.seq_len, options.seq_velocity), ev.method);
  } else {
    decisions.reserve(results.size());
    for (auto& r : results) decisions.push_back(std::move(r.decision));
  }
  ev.records = score_records(decisions, gt);
  ev.curve = pr_curve(ev.records);
  return ev;
}

}  // namespace vprfuse
