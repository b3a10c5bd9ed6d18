#include "riparian/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "riparian/analysis.hpp"
#include "riparian/axioms.hpp"
#include "riparian/basin.hpp"
#include "riparian/cli/datasets.hpp"
#include "riparian/cli/io.hpp"
#include "riparian/cli/reproduce.hpp"
#include "riparian/rule_spec.hpp"

namespace riparian::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string general(double v, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// --- allocate --------------------------------------------------------------------

struct AllocateOptions {
  std::string claims;
  std::string basin;
  std::optional<std::string> budget;
  std::string rule;
  std::optional<std::string> gamma;
  std::optional<std::string> lambda;
  std::optional<std::string> gamma_fn;
  bool exact = false;
  std::string format = "table";
  int decimals = 2;
};

/// Builds the `kind:param` rule text, rejecting parameters that do not
/// belong to the chosen rule.
std::string rule_text(const AllocateOptions& o) {
  const bool inline_param = o.rule.find(':') != std::string::npos;
  const std::string kind = o.rule.substr(0, o.rule.find(':'));
  auto forbid = [&](const std::optional<std::string>& flag, const char* name, const char* owner) {
    if (flag) throw UsageError(std::string(name) + " only applies to --rule " + owner);
  };
  if (kind != "geometric") forbid(o.gamma, "--gamma", "geometric");
  if (kind != "averaging") forbid(o.lambda, "--lambda", "averaging");
  if (kind != "gengeo") forbid(o.gamma_fn, "--gamma-fn", "gengeo");
  if (inline_param) {
    if (o.gamma || o.lambda || o.gamma_fn) throw UsageError("rule parameter given both inline and as a flag");
    return o.rule;
  }
  auto need = [&](const std::optional<std::string>& flag, const char* name) -> const std::string& {
    if (!flag) throw UsageError("--rule " + kind + " requires " + name);
    return *flag;
  };
  if (kind == "geometric") return "geometric:" + need(o.gamma, "--gamma");
  if (kind == "averaging") return "averaging:" + need(o.lambda, "--lambda");
  if (kind == "gengeo") return "gengeo:" + need(o.gamma_fn, "--gamma-fn");
  return kind;
}

template <Quantity T>
struct AllocationView {
  std::string rule;
  std::vector<std::string> agents;
  std::vector<T> claims;
  T budget;
  T aggregate;
  std::vector<T> awards;
  std::optional<std::vector<T>> retained;
};

template <Quantity T>
std::string display(const T& v, int decimals) {
  if constexpr (NumericTraits<T>::exact) {
    return NumericTraits<T>::to_string(v);
  } else {
    return format_fixed(v, decimals);
  }
}

// Header lines in float mode show 12 significant digits so sums such as
// 81.24000000000001 read as entered.
template <Quantity T>
std::string header_value(const T& v) {
  if constexpr (NumericTraits<T>::exact) {
    return NumericTraits<T>::to_string(v);
  } else {
    return general(v, 12);
  }
}

template <Quantity T>
ordered_json json_value(const T& v) {
  if constexpr (NumericTraits<T>::exact) {
    return NumericTraits<T>::to_string(v);
  } else {
    return v;
  }
}

template <Quantity T>
void render_allocation(std::ostream& out, const AllocationView<T>& v, const std::string& format, int decimals) {
  using Traits = NumericTraits<T>;
  const std::size_t n = v.agents.size();
  if (format == "json") {
    ordered_json doc;
    doc["rule"] = v.rule;
    doc["backend"] = std::string(Traits::backend_name);
    doc["budget"] = json_value(v.budget);
    doc["aggregate"] = json_value(v.aggregate);
    doc["agents"] = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
      ordered_json row;
      row["agent"] = v.agents[i];
      row["claim"] = json_value(v.claims[i]);
      if (v.retained) row["retained"] = json_value((*v.retained)[i]);
      row["award"] = json_value(v.awards[i]);
      doc["agents"].push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << "agent,claim" << (v.retained ? ",retained" : "") << ",award\n";
    for (std::size_t i = 0; i < n; ++i) {
      out << v.agents[i] << ',' << Traits::to_string(v.claims[i]);
      if (v.retained) out << ',' << Traits::to_string((*v.retained)[i]);
      out << ',' << Traits::to_string(v.awards[i]) << '\n';
    }
    return;
  }

  out << "rule       " << v.rule << '\n'
      << "backend    " << Traits::backend_name << '\n'
      << "budget     " << header_value(v.budget) << '\n'
      << "aggregate  " << header_value(v.aggregate) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"agent", "claim"});
  if (v.retained) rows.back().push_back("retained");
  rows.back().push_back("award");
  std::vector<std::string> shown;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> row = {v.agents[i], Traits::to_string(v.claims[i])};
    if (v.retained) row.push_back(display((*v.retained)[i], decimals));
    shown.push_back(display(v.awards[i], decimals));
    row.push_back(shown.back());
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 == row.size()) {
        out << row[c];
      } else {
        out << std::left << std::setw(static_cast<int>(widths[c] + 2)) << row[c];
      }
    }
    out << '\n';
  }
  out << "\nallocation: " << join(shown, ", ") << '\n';
}

template <Quantity T>
void allocate_linear(const AllocateOptions& o, std::ostream& out) {
  if (!o.budget) throw UsageError("--claims requires --budget");
  const ClaimsTable table = read_claims_file(o.claims);
  const Problem<T> p = to_problem<T>(table, *o.budget);
  const RuleSpec<T> rule = RuleSpec<T>::parse(rule_text(o));
  const Allocation<T> x = rule(p);
  AllocationView<T> view{rule.name(),
                         table.agents,
                         {p.claims().begin(), p.claims().end()},
                         p.budget(),
                         p.aggregate(),
                         {x.awards().begin(), x.awards().end()},
                         std::nullopt};
  render_allocation(out, view, o.format, o.decimals);
}

template <Quantity T>
void allocate_basin(const AllocateOptions& o, std::ostream& out) {
  if (o.budget) throw UsageError("--basin takes its budget from the file; drop --budget");
  const std::string kind = o.rule.substr(0, o.rule.find(':'));
  if (kind != "geometric") throw UsageError("--basin supports only --rule geometric");
  if (o.lambda || o.gamma_fn) throw UsageError("--basin accepts only --gamma");
  const BasinSpec spec = read_basin_file(o.basin);
  const BasinGraph<T> g = to_basin<T>(spec);

  std::optional<std::string> gamma_text = o.gamma;
  if (o.rule.find(':') != std::string::npos) {
    if (o.gamma) throw UsageError("rule parameter given both inline and as a flag");
    gamma_text = o.rule.substr(o.rule.find(':') + 1);
  }
  const bool every_node_has_gamma =
      std::all_of(g.nodes().begin(), g.nodes().end(), [](const BasinNode<T>& n) { return n.gamma.has_value(); });
  if (!gamma_text && !every_node_has_gamma) {
    throw UsageError("--rule geometric on a basin requires --gamma unless every node sets its own gamma");
  }
  const GammaParam<T> gamma(gamma_text ? parse_quantity<T>(*gamma_text) : T{0});
  const BasinAllocation<T> x = basin_geometric(g, gamma);

  std::vector<T> claims;
  for (const auto& n : g.nodes()) claims.push_back(n.claim);
  AllocationView<T> view{gamma_text ? "geometric:" + NumericTraits<T>::to_string(gamma.value()) : "geometric:per-node",
                         x.ids,
                         std::move(claims),
                         g.budget(),
                         g.aggregate(),
                         {x.awards.awards().begin(), x.awards.awards().end()},
                         x.retained_shares};
  render_allocation(out, view, o.format, o.decimals);
}

template <Quantity T>
void allocate(const AllocateOptions& o, std::ostream& out) {
  if (o.basin.empty()) {
    allocate_linear<T>(o, out);
  } else {
    allocate_basin<T>(o, out);
  }
}

// --- sweep -----------------------------------------------------------------------

struct SweepOptions {
  std::string claims;
  std::string budget;
  std::size_t points = 1001;
  std::string out_file;
  std::string format = "csv";
  double tolerance = 1e-6;
};

void sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  if (o.points < 2) throw UsageError("--points must be at least 2");
  const ClaimsTable table = read_claims_file(o.claims);
  const Problem<double> p = to_problem<double>(table, o.budget);
  const SweepResult<double> result = sweep_gamma(p, uniform_grid<double>(o.points));
  const std::vector<double> argmax = argmax_gamma_per_agent(p, o.tolerance);

  std::ostringstream data;
  if (o.format == "json") {
    ordered_json doc;
    doc["agents"] = table.agents;
    doc["gamma"] = result.grid;
    doc["awards"] = result.awards;
    ordered_json best;
    for (std::size_t i = 0; i < p.size(); ++i) best[table.agents[i]] = argmax[i];
    doc["argmax_gamma"] = std::move(best);
    data << doc.dump(2) << '\n';
  } else {
    data << "gamma";
    for (const auto& a : table.agents) data << ',' << a;
    data << '\n';
    for (std::size_t k = 0; k < result.grid.size(); ++k) {
      data << NumericTraits<double>::to_string(result.grid[k]);
      for (double v : result.awards[k]) data << ',' << NumericTraits<double>::to_string(v);
      data << '\n';
    }
  }

  std::ostringstream summary;
  summary << "argmax gamma per agent:\n";
  for (std::size_t i = 0; i < p.size(); ++i) summary << "  " << table.agents[i] << "  " << general(argmax[i]) << '\n';

  if (o.out_file.empty()) {
    out << data.str();
    err << summary.str();
  } else {
    write_text_file(o.out_file, data.str());
    out << "wrote " << o.out_file << " (" << o.points << " grid points)\n" << summary.str();
  }
}

// --- threshold -------------------------------------------------------------------

struct ThresholdOptions {
  std::string claims;
  std::string budget;
  std::string family = "geometric";
  double tolerance = 1e-4;
  double grid_step = 1e-3;
  std::string format = "text";
};

void threshold(const ThresholdOptions& o, std::ostream& out) {
  const ClaimsTable table = read_claims_file(o.claims);
  const Problem<double> p = to_problem<double>(table, o.budget);
  const ThresholdResult r = o.family == "averaging" ? min_lambda_claims_bounded(p)
                                                    : search_min_parameter(p, Family::Geometric, {o.grid_step, o.tolerance});
  std::vector<std::string> intervals;
  for (const auto& iv : r.feasible_intervals) intervals.push_back("[" + general(iv.lo) + ", " + general(iv.hi) + "]");

  if (o.format == "json") {
    ordered_json doc;
    doc["family"] = family_name(r.family);
    doc["threshold"] = r.value;
    doc["binding_agent"] = r.binding_agent ? ordered_json(table.agents[*r.binding_agent]) : ordered_json(nullptr);
    ordered_json runs = ordered_json::array();
    for (const auto& iv : r.feasible_intervals) runs.push_back({iv.lo, iv.hi});
    doc["feasible_intervals"] = std::move(runs);
    doc["single_interval"] = r.single_interval;
    doc["tolerance"] = r.tolerance;
    doc["method"] = r.method;
    doc["warnings"] = r.warnings;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "family              " << family_name(r.family) << '\n'
      << "threshold           " << general(r.value) << '\n'
      << "binding agent       "
      << (r.binding_agent ? table.agents[*r.binding_agent] + " (" + std::to_string(*r.binding_agent + 1) + ")" : "none")
      << '\n'
      << "feasible intervals  " << join(intervals, ", ") << '\n'
      << "single interval     " << (r.single_interval ? "yes" : "no") << '\n'
      << "tolerance           " << general(r.tolerance) << '\n'
      << "method              " << r.method << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
}

// --- axioms ----------------------------------------------------------------------

struct AxiomOptions {
  std::string rule;
  std::vector<std::string> axioms;
  bool all = false;
  std::uint64_t seed = 7;
  std::size_t samples = 500;
  std::string backend = "exact";
  bool extended_positions = false;
  std::size_t max_agents = 8;
  std::string format = "text";
};

template <Quantity T>
void print_counterexample(std::ostream& out, const Counterexample<T>& ce) {
  using Traits = NumericTraits<T>;
  out << "  check: " << ce.description << '\n';
  for (std::size_t j = 0; j < ce.witness.problems.size(); ++j) {
    const auto& p = ce.witness.problems[j];
    std::vector<std::string> claims;
    for (const T& c : p.claims()) claims.push_back(Traits::to_string(c));
    out << "  problem " << j + 1 << ": claims (" << join(claims, ", ") << "), budget " << Traits::to_string(p.budget())
        << '\n';
  }
  if (!ce.witness.scalars.empty()) {
    std::vector<std::string> scalars;
    for (const T& s : ce.witness.scalars) scalars.push_back(Traits::to_string(s));
    out << "  parameters: " << join(scalars, ", ") << '\n';
  }
  if (!ce.witness.indices.empty()) {
    std::vector<std::string> positions;
    for (std::size_t i : ce.witness.indices) positions.push_back(std::to_string(i + 1));
    out << "  positions: " << join(positions, ", ") << '\n';
  }
  out << "  agent " << ce.comparison.agent + 1 << ": " << Traits::to_string(ce.comparison.lhs) << " vs "
      << Traits::to_string(ce.comparison.rhs) << " (difference " << Traits::to_string(ce.comparison.difference)
      << ")\n";
}

template <Quantity T>
int run_axioms(const AxiomOptions& o, const std::vector<Axiom>& axioms, std::ostream& out) {
  const RuleSpec<T> rule = RuleSpec<T>::parse(o.rule);
  CheckConfig config;
  config.seed = o.seed;
  config.samples = o.samples;
  config.extended_positions = o.extended_positions;
  config.generator.max_agents = std::max(o.max_agents, config.generator.min_agents);

  bool any_violated = false;
  ordered_json reports = ordered_json::array();
  for (Axiom a : axioms) {
    const AxiomReport<T> r = check_axiom(a, rule, config);
    any_violated = any_violated || r.verdict == Verdict::Violated;
    if (o.format == "json") {
      reports.push_back(ordered_json::parse(report_to_json(r)));
      continue;
    }
    out << axiom_name(a) << "  " << r.rule << "  " << verdict_name(r.verdict) << (r.conclusive ? "" : " (heuristic)")
        << "  [" << r.sample_size << " samples, " << r.skipped << " skipped, seed " << r.seed << ", " << r.backend
        << "]\n";
    if (r.counterexample) print_counterexample(out, *r.counterexample);
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
  }
  if (o.format == "json") out << ordered_json{{"reports", std::move(reports)}}.dump(2) << '\n';
  return any_violated ? kMismatchOrViolation : kSuccess;
}

int axioms_command(const AxiomOptions& o, std::ostream& out, std::ostream& err) {
  if (o.all == !o.axioms.empty()) throw UsageError("give either --axiom NAME (repeatable) or --all");
  std::vector<Axiom> axioms;
  if (o.all) {
    axioms = all_axioms();
  } else {
    for (const auto& name : o.axioms) {
      const auto a = parse_axiom(name);
      if (!a) {
        std::vector<std::string> names;
        for (Axiom known : all_axioms()) names.emplace_back(axiom_name(known));
        err << "error: unknown axiom '" << name << "'; available: " << join(names, ", ") << '\n';
        return kUsageOrValidation;
      }
      axioms.push_back(*a);
    }
  }
  return o.backend == "float" ? run_axioms<double>(o, axioms, out) : run_axioms<Rational>(o, axioms, out);
}

int replay_command(const std::string& path, std::ostream& out) {
  const std::string text = read_text_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
  std::vector<nlohmann::json> reports;
  if (doc.contains("reports")) {
    for (const auto& r : doc["reports"]) reports.push_back(r);
  } else {
    reports.push_back(doc);
  }
  bool all_reproduced = true;
  for (const auto& r : reports) {
    const ReplayOutcome outcome = replay_serialized_report(r.dump());
    out << r.value("axiom", "?") << "  " << r.value("rule", "?") << "  ";
    if (!outcome.has_counterexample) {
      out << "no counterexample\n";
      continue;
    }
    all_reproduced = all_reproduced && outcome.reproduced;
    out << (outcome.reproduced ? "reproduced" : "NOT reproduced") << "  (" << outcome.detail << ")\n";
  }
  return all_reproduced ? kSuccess : kMismatchOrViolation;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("RIPARIAN_SEED");
  if (env == nullptr || *env == '\0') return 7;
  try {
    std::size_t used = 0;
    const unsigned long long seed = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return seed;
  } catch (const std::exception&) {
    throw UsageError(std::string("RIPARIAN_SEED must be a non-negative integer, got '") + env + "'");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pollution permit allocation on rivers and river basins", "riparian"};
  app.require_subcommand(0, 1);
  std::string dump_dir;
  app.add_option("--dump-data", dump_dir, "Write the embedded datasets into DIR and exit");

  AllocateOptions alloc;
  auto* allocate_cmd = app.add_subcommand("allocate", "Allocate a budget among agents");
  auto* claims_opt = allocate_cmd->add_option("--claims", alloc.claims, "ClaimsFile CSV (agent,claim)");
  auto* basin_opt = allocate_cmd->add_option("--basin", alloc.basin, "BasinFile JSON");
  claims_opt->excludes(basin_opt);
  allocate_cmd->add_option("--budget", alloc.budget, "Budget E (required with --claims)");
  allocate_cmd->add_option("--rule", alloc.rule, "prop | ft | geometric | averaging | gengeo (or kind:param)")
      ->required();
  allocate_cmd->add_option("--gamma", alloc.gamma, "Retention share for --rule geometric");
  allocate_cmd->add_option("--lambda", alloc.lambda, "Weight for --rule averaging");
  allocate_cmd->add_option("--gamma-fn", alloc.gamma_fn, "linear:G | cap:A | pwl:t0:y0,t1:y1,...");
  allocate_cmd->add_flag("--exact", alloc.exact, "Exact rational arithmetic; prints reduced fractions");
  allocate_cmd->add_option("--format", alloc.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  allocate_cmd->add_option("--decimals", alloc.decimals, "Decimals shown in float table output")
      ->check(CLI::Range(0, 17));

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Geometric awards over an evenly spaced gamma grid");
  sweep_cmd->add_option("--claims", sweep_opts.claims, "ClaimsFile CSV")->required();
  sweep_cmd->add_option("--budget", sweep_opts.budget, "Budget E")->required();
  sweep_cmd->add_option("--points", sweep_opts.points, "Grid points including both ends");
  sweep_cmd->add_option("--out", sweep_opts.out_file, "Write the sweep here instead of stdout");
  sweep_cmd->add_option("--format", sweep_opts.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--tol", sweep_opts.tolerance, "Tolerance of the per-agent argmax refinement")
      ->check(CLI::PositiveNumber);

  ThresholdOptions thr;
  auto* threshold_cmd = app.add_subcommand("threshold", "Smallest parameter giving claims-bounded awards");
  threshold_cmd->add_option("--claims", thr.claims, "ClaimsFile CSV")->required();
  threshold_cmd->add_option("--budget", thr.budget, "Budget E")->required();
  threshold_cmd->add_option("--family", thr.family, "geometric | averaging")
      ->check(CLI::IsMember({"geometric", "averaging"}));
  threshold_cmd->add_option("--tol", thr.tolerance, "Bisection tolerance")->check(CLI::PositiveNumber);
  threshold_cmd->add_option("--grid-step", thr.grid_step, "Scan step over [0, 1]")->check(CLI::Range(1e-6, 1.0));
  threshold_cmd->add_option("--format", thr.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  AxiomOptions ax;
  auto* axioms_cmd = app.add_subcommand("axioms", "Check axioms on random samples");
  axioms_cmd->add_option("--rule", ax.rule, "prop | ft | geometric:G | averaging:L | gengeo:FN")->required();
  axioms_cmd->add_option("--axiom", ax.axioms, "Axiom name (repeatable)");
  axioms_cmd->add_flag("--all", ax.all, "Run every checker");
  auto* seed_opt = axioms_cmd->add_option("--seed", ax.seed, "Generator seed (default 7 or $RIPARIAN_SEED)");
  axioms_cmd->add_option("--samples", ax.samples, "Instances per checker")->check(CLI::PositiveNumber);
  axioms_cmd->add_option("--backend", ax.backend, "exact | float")->check(CLI::IsMember({"exact", "float"}));
  axioms_cmd->add_flag("--extended-positions", ax.extended_positions,
                       "Include the mouth among equal-single-polluter positions");
  axioms_cmd->add_option("--max-agents", ax.max_agents, "Largest population drawn")->check(CLI::Range(2, 64));
  axioms_cmd->add_option("--format", ax.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-check counterexamples from a JSON axiom report");
  replay_cmd->add_option("file", replay_path, "Report JSON written by `axioms --format json`")->required();

  std::string what = "all";
  std::string reproduce_out;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Regenerate the case-study tables and compare");
  std::vector<std::string> what_choices = reproduce_targets();
  what_choices.emplace_back("all");
  reproduce_cmd->add_option("--what", what, "example1 | table1 | table4 | table5 | basins | thresholds | matrix | all")
      ->check(CLI::IsMember(what_choices));
  reproduce_cmd->add_option("--out", reproduce_out, "Directory for regenerated artifacts");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageOrValidation;
  }

  try {
    if (!dump_dir.empty()) {
      for (const auto& path : dump_datasets(dump_dir)) out << "wrote " << path << '\n';
      if (app.get_subcommands().empty()) return kSuccess;
    }
    if (allocate_cmd->parsed()) {
      if (alloc.claims.empty() == alloc.basin.empty()) throw UsageError("give exactly one of --claims or --basin");
      if (alloc.exact) {
        allocate<Rational>(alloc, out);
      } else {
        allocate<double>(alloc, out);
      }
      return kSuccess;
    }
    if (sweep_cmd->parsed()) {
      sweep(sweep_opts, out, err);
      return kSuccess;
    }
    if (threshold_cmd->parsed()) {
      threshold(thr, out);
      return kSuccess;
    }
    if (axioms_cmd->parsed()) {
      if (seed_opt->count() == 0) ax.seed = default_seed();
      return axioms_command(ax, out, err);
    }
    if (replay_cmd->parsed()) return replay_command(replay_path, out);
    if (reproduce_cmd->parsed()) {
      return run_reproduce(what, reproduce_out.empty() ? std::nullopt : std::optional<std::string>(reproduce_out), out);
    }
    err << app.help();
    return kUsageOrValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageOrValidation;
}

}  // namespace riparian::cli
