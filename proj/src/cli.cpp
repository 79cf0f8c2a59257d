#include "vprfuse/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "vprfuse/bench.hpp"
#include "vprfuse/error.hpp"
#include "vprfuse/fusion.hpp"
#include "vprfuse/io.hpp"
#include "vprfuse/kernels.hpp"
#include "vprfuse/methods.hpp"
#include "vprfuse/synthetic.hpp"

namespace vprfuse::cli {

namespace {

struct RunConfig {
  std::string manifest;
  std::vector<std::string> methods{"bayes-selective"};
  double gamma = kDefaultGamma;
  double threshold = 0.5;
  std::size_t seq_len = 1;
  double seq_velocity = 1.0;
  std::string out_dir;
  int jobs = 1;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

std::string file_stem(const std::string& method) {
  std::string s = method;
  std::replace(s.begin(), s.end(), ':', '_');
  return s;
}

std::vector<std::string> labels_of(const Dataset& ds) {
  std::vector<std::string> labels;
  for (const auto& r : ds.references) labels.push_back(r.label);
  return labels;
}

void write_pr_csv(std::ostream& os, const PRCurve& curve) {
  os << "threshold,recall,precision\n";
  for (const auto& p : curve.points) os << fmt(p.threshold) << ',' << fmt(p.recall) << ',' << fmt(p.precision) << '\n';
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  return f;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Dataset ds = load_dataset(std::filesystem::path(cfg.manifest));
  const auto labels = labels_of(ds);
  const auto methods = parse_methods(cfg.methods, labels);
  if (cfg.seq_len > ds.queries.rows()) throw ValidationError("--seq-len exceeds the number of queries");

  const auto stacks = kernels::batch_distance_stacks(ds.queries, ds.references, cfg.jobs);
  EvalOptions options;
  options.method.gamma = cfg.gamma;
  options.seq_len = cfg.seq_len;
  options.seq_velocity = cfg.seq_velocity;
  options.jobs = cfg.jobs;

  std::ostringstream summary;
  summary << "method,auc,n_queries\n";
  const bool to_dir = !cfg.out_dir.empty();
  if (to_dir) std::filesystem::create_directories(cfg.out_dir);
  for (const auto& m : methods) {
    const MethodEvaluation ev = evaluate_method(m, stacks, ds.ground_truth, options);
    if (ev.no_information > 0) {
      err << ev.method << ": " << ev.no_information << " queries carried no information and were not matched\n";
    }
    if (to_dir) {
      auto f = open_out(std::filesystem::path(cfg.out_dir) / ("pr_" + file_stem(ev.method) + ".csv"));
      write_pr_csv(f, ev.curve);
    } else {
      out << "# method=" << ev.method << '\n';
      write_pr_csv(out, ev.curve);
    }
    summary << ev.method << ',' << fmt(ev.curve.auc) << ',' << ev.records.size() << '\n';
  }
  if (to_dir) {
    auto f = open_out(std::filesystem::path(cfg.out_dir) / "summary.csv");
    f << summary.str();
  }
  out << summary.str();
  return 0;
}

std::vector<double> parse_mixture(const std::string& text) {
  std::vector<double> weights;
  if (text.empty()) return weights;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      weights.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("--mixture: cannot parse '" + item + "'");
    }
  }
  return weights;
}

int cmd_synth(const SyntheticParams& params, const std::string& out_dir, std::ostream& out) {
  const auto synthetic = generate_synthetic(params);
  const auto manifest = write_synthetic(synthetic, out_dir);
  out << manifest.string() << '\n';
  return 0;
}

int cmd_match(const RunConfig& cfg, const std::string& query_path, std::size_t row, std::ostream& out,
              std::ostream& err) {
  const Dataset ds = load_dataset(std::filesystem::path(cfg.manifest));
  const DescriptorMatrix queries = read_descriptor_file(query_path);
  if (queries.rows() != 1 && row == SIZE_MAX) {
    throw ValidationError("query file holds " + std::to_string(queries.rows()) + " descriptors; pick one with --row");
  }
  const std::size_t j = row == SIZE_MAX ? 0 : row;
  if (j >= queries.rows()) throw ValidationError("--row out of range");
  if (queries.dim() != ds.dim()) {
    throw DimensionMismatch("query dimension " + std::to_string(queries.dim()) + " does not match dataset dimension " +
                            std::to_string(ds.dim()));
  }

  const DistanceStack stack = distance_stack(queries.row(j), ds.references);
  const SelectionResult selection = select_references(stack, cfg.gamma);
  out << "selected:";
  for (std::size_t u : selection.selected) out << ' ' << ds.references[u].label;
  out << " (" << selection.selected.size() << " of " << stack.size() << ")\n";
  out << "per-set minima:\n";
  for (std::size_t u = 0; u < stack.size(); ++u) {
    out << "  " << ds.references[u].label << ' ' << fmt(selection.minima[u]) << (u == selection.best ? " *" : "")
        << '\n';
  }
  if (selection.zero_minimum) out << "note: best minimum distance is zero; selected the sets with zero minimum\n";

  Belief belief;
  try {
    belief = posterior(stack, selection, Prior::uniform(ds.places()));
  } catch (const NoInformation& e) {
    err << "no information: " << e.what() << '\n';
    out << "decision: no-match (no information)\n";
    return 0;
  }
  for (std::size_t u : belief.degenerate) out << "degenerate: " << ds.references[u].label << " ignored\n";

  std::vector<std::size_t> order(belief.normalized.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t top = std::min<std::size_t>(5, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return belief.normalized[a] > belief.normalized[b] ||
                             (belief.normalized[a] == belief.normalized[b] && a < b);
                    });
  out << "top beliefs:\n";
  for (std::size_t k = 0; k < top; ++k) out << "  place " << order[k] << ' ' << fmt(belief.normalized[order[k]]) << '\n';

  const PlaceDecision d = decide(belief, cfg.threshold);
  if (d.matched()) {
    out << "decision: place " << *d.place << " confidence " << fmt(d.confidence) << '\n';
  } else {
    out << "decision: no-match (max belief " << fmt(d.confidence) << " <= threshold " << fmt(cfg.threshold) << ")\n";
  }
  return 0;
}

int cmd_bench(const RunConfig& cfg, const SyntheticParams& synth, std::size_t repetitions, std::size_t max_queries,
              std::ostream& out) {
  Dataset ds = cfg.manifest.empty() ? generate_synthetic(synth).dataset : load_dataset(std::filesystem::path(cfg.manifest));
  const auto methods = parse_methods(cfg.methods, labels_of(ds));
  BenchOptions options;
  options.repetitions = repetitions;
  options.max_queries = max_queries;
  options.method.gamma = cfg.gamma;

  std::ostringstream csv;
  csv << "method,phase,mean_s,median_s\n";
  for (const auto& m : methods) {
    const BenchReport report = bench_query(ds, m, options);
    for (const auto& p : report.phases) csv << report.method << ',' << p.phase << ',' << fmt(p.mean_s) << ',' << fmt(p.median_s) << '\n';
    if (cfg.jobs > 1) {
      const BenchReport par = bench_batch(ds, m, options, cfg.jobs);
      for (const auto& p : par.phases) csv << par.method << ',' << p.phase << ',' << fmt(p.mean_s) << ',' << fmt(p.median_s) << '\n';
    }
  }
  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    auto f = open_out(std::filesystem::path(cfg.out_dir) / "timing.csv");
    f << csv.str();
  }
  out << csv.str();
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bayesian selective fusion for multi-reference visual place recognition", "vprfuse"};
  app.require_subcommand(1);

  RunConfig cfg;
  SyntheticParams synth;
  std::string mixture;
  std::string synth_out;
  std::string query_path;
  std::size_t row = SIZE_MAX;
  std::size_t repetitions = 3;
  std::size_t max_queries = 0;

  auto add_method_flags = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.methods, "method selector(s); 'all' expands to every method")->expected(1, -1);
    sub->add_option("--gamma", cfg.gamma, "relative selection fraction")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_synth_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", synth.seed);
    sub->add_option("--places", synth.places)->check(CLI::PositiveNumber);
    sub->add_option("--conditions", synth.conditions)->check(CLI::PositiveNumber);
    sub->add_option("--dim", synth.dim)->check(CLI::PositiveNumber);
    sub->add_option("--queries", synth.queries, "number of queries, 0 = one per place");
  };

  auto* eval = app.add_subcommand("eval", "precision-recall sweep and AUC per method");
  eval->add_option("--manifest", cfg.manifest)->required();
  add_method_flags(eval);
  eval->add_option("--seq-len", cfg.seq_len, "sequence window length")->check(CLI::PositiveNumber);
  eval->add_option("--seq-velocity", cfg.seq_velocity, "places advanced per query")->check(CLI::PositiveNumber);
  eval->add_option("--out", cfg.out_dir, "output directory (stdout if omitted)");

  auto* synth_cmd = app.add_subcommand("synth", "generate a seeded multi-condition dataset");
  add_synth_flags(synth_cmd);
  synth_cmd->add_option("--sigma-place", synth.sigma_place)->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--sigma-condition", synth.sigma_condition)->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--sigma-query", synth.sigma_query)->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--mixture", mixture, "comma-separated query condition weights");
  synth_cmd->add_option("--gt-tolerance", synth.gt_tolerance);
  synth_cmd->add_option("--out", synth_out, "output directory")->required();

  auto* match = app.add_subcommand("match", "decision report for one query descriptor");
  match->add_option("--manifest", cfg.manifest)->required();
  match->add_option("--query", query_path, "descriptor file")->required();
  match->add_option("--row", row, "row of the query file to use");
  match->add_option("--gamma", cfg.gamma)->check(CLI::PositiveNumber);
  match->add_option("--threshold", cfg.threshold, "belief threshold h")->check(CLI::Range(0.0, 1.0));

  auto* bench = app.add_subcommand("bench", "per-query timing split by phase");
  bench->add_option("--manifest", cfg.manifest, "dataset manifest; synthetic data when omitted");
  add_method_flags(bench);
  add_synth_flags(bench);
  bench->add_option("--repetitions", repetitions)->check(CLI::PositiveNumber);
  bench->add_option("--max-queries", max_queries, "0 = every query");
  bench->add_option("--out", cfg.out_dir);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*eval) return cmd_eval(cfg, out, err);
    if (*synth_cmd) {
      synth.mixture = parse_mixture(mixture);
      return cmd_synth(synth, synth_out, out);
    }
    if (*match) return cmd_match(cfg, query_path, row, out, err);
    if (*bench) return cmd_bench(cfg, synth, repetitions, max_queries, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace vprfuse::cli
