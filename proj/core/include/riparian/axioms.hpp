#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "riparian/problem.hpp"
#include "riparian/rule_spec.hpp"

namespace riparian {

enum class Axiom {
  ScaleInvariance,
  BudgetAdditivity,
  UpstreamInvariance,
  EqualSinglePolluters,
  TopConsistency,
  EqualTreatmentEqualClaims,
  Additivity,
  MergingSplitting,
  BudgetLinearity,
  Continuity,
};

/// Command-line name, e.g. "top-consistency".
std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);
/// Every checker, in reporting order.
const std::vector<Axiom>& all_axioms();
/// Every checker with a pass/fail meaning (all but the continuity heuristic).
const std::vector<Axiom>& matrix_axioms();

// ---------------------------------------------------------------------------
// Random problems

struct GeneratorConfig {
  std::size_t min_agents = 2;
  std::size_t max_agents = 8;
  /// Claims are drawn on a 0.01 lattice inside [claim_min, claim_max].
  double claim_min = 0;
  double claim_max = 20;
  bool redistribution_only = false;
  double zero_claim_probability = 0.1;
};

/// Deterministic stream of valid problems. Claims are multiples of 1/100 and
/// budgets are C·k/1000, so the exact backend sees the same values the float
/// backend approximates. An all-zero draw is repaired by giving one random
/// agent a positive claim.
template <Quantity T>
class ProblemGenerator {
 public:
  ProblemGenerator(std::uint64_t seed, GeneratorConfig config);

  Problem<T> next();
  Problem<T> next_with_agents(std::size_t agents);

  const GeneratorConfig& config() const noexcept { return config_; }
  std::mt19937_64& engine() noexcept { return engine_; }
  /// k/denominator with k uniform on [lo, hi].
  T fraction(long lo, long hi, long denominator);
  std::size_t index(std::size_t lo, std::size_t hi);

 private:
  T draw_claim();

  GeneratorConfig config_;
  std::mt19937_64 engine_;
  long claim_lo_;
  long claim_hi_;
};

template <Quantity T>
ProblemGenerator<T> gen_problems(std::uint64_t seed, GeneratorConfig config) {
  return ProblemGenerator<T>(seed, config);
}

// ---------------------------------------------------------------------------
// Checks

/// One instance of an axiom's hypothesis: the problems involved plus the
/// scalar and positional parameters (μ, E', δ, α, ε, agent positions).
/// Re-running compare_witness on it reproduces the same comparison.
template <Quantity T>
struct Witness {
  std::vector<Problem<T>> problems;
  std::vector<T> scalars;
  std::vector<std::size_t> indices;  // 0-based
};

/// The two sides of the axiom's equation for one agent.
template <Quantity T>
struct Comparison {
  std::size_t agent = 0;  // 0-based
  T lhs{0};
  T rhs{0};
  T difference{0};
};

template <Quantity T>
struct Counterexample {
  Witness<T> witness;
  Comparison<T> comparison;
  /// Human-readable form of the two sides, e.g. "phi(mu c, mu E) vs mu phi(c, E)".
  std::string description;
};

enum class Verdict { SatisfiedOnSample, Violated };
std::string_view verdict_name(Verdict verdict);

template <Quantity T>
struct AxiomReport {
  Axiom axiom = Axiom::ScaleInvariance;
  std::string rule;
  Verdict verdict = Verdict::SatisfiedOnSample;
  std::optional<Counterexample<T>> counterexample;
  std::uint64_t seed = 0;
  /// Instances examined (including skipped ones). A satisfied verdict holds
  /// on this sample only.
  std::size_t sample_size = 0;
  /// Instances whose precondition failed, e.g. top consistency with φ_1 > c_1.
  std::size_t skipped = 0;
  /// False for the continuity heuristic.
  bool conclusive = true;
  std::string backend;
  std::vector<std::string> notes;
};

struct CheckConfig {
  std::uint64_t seed = 7;
  std::size_t samples = 500;
  GeneratorConfig generator;
  /// Include the mouth among equal-single-polluter positions.
  bool extended_positions = false;
  std::size_t merging_max_agents = 12;
  double continuity_epsilon = 1e-6;
  double lipschitz_bound = 1e3;
  /// Candidate evaluations allowed while minimising a counterexample.
  std::size_t shrink_attempts = 400;
};

/// Evaluates both sides of `axiom` on `witness`; nullopt when the witness
/// does not meet the axiom's precondition.
template <Quantity T>
std::optional<std::vector<Comparison<T>>> compare_witness(Axiom axiom, const RuleSpec<T>& rule, const Witness<T>& witness);

/// Largest difference that still counts as equal: 0 for exact, 1e-6 for
/// float, K·ε for the continuity heuristic.
template <Quantity T>
T violation_threshold(Axiom axiom, const Witness<T>& witness);

/// True iff the stored counterexample still violates the axiom.
template <Quantity T>
bool replay(Axiom axiom, const RuleSpec<T>& rule, const Counterexample<T>& counterexample);

template <Quantity T>
AxiomReport<T> check_axiom(Axiom axiom, const RuleSpec<T>& rule, const CheckConfig& config = {});

template <Quantity T>
AxiomReport<T> check_scale_invariance(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::ScaleInvariance, rule, config);
}
template <Quantity T>
AxiomReport<T> check_budget_additivity(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::BudgetAdditivity, rule, config);
}
template <Quantity T>
AxiomReport<T> check_upstream_invariance(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::UpstreamInvariance, rule, config);
}
template <Quantity T>
AxiomReport<T> check_equal_single_polluters(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::EqualSinglePolluters, rule, config);
}
template <Quantity T>
AxiomReport<T> check_top_consistency(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::TopConsistency, rule, config);
}
template <Quantity T>
AxiomReport<T> check_equal_treatment_equal_claims(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::EqualTreatmentEqualClaims, rule, config);
}
template <Quantity T>
AxiomReport<T> check_additivity(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::Additivity, rule, config);
}
template <Quantity T>
AxiomReport<T> check_merging_splitting(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::MergingSplitting, rule, config);
}
template <Quantity T>
AxiomReport<T> check_budget_linearity(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::BudgetLinearity, rule, config);
}
template <Quantity T>
AxiomReport<T> check_continuity_heuristic(const RuleSpec<T>& rule, const CheckConfig& config = {}) {
  return check_axiom(Axiom::Continuity, rule, config);
}

template <Quantity T>
struct AxiomMatrix {
  std::vector<std::string> rules;
  std::vector<Axiom> axioms;
  /// reports[r][a] for rules[r], axioms[a].
  std::vector<std::vector<AxiomReport<T>>> reports;
};

/// Runs every checker in `axioms` (default: matrix_axioms()) on every rule.
template <Quantity T>
AxiomMatrix<T> axiom_matrix(const std::vector<RuleSpec<T>>& rules, const CheckConfig& config = {},
                            std::vector<Axiom> axioms = {});

/// Y / N grid, one row per axiom and one column per rule.
template <Quantity T>
std::string render_axiom_matrix(const AxiomMatrix<T>& matrix);

// ---------------------------------------------------------------------------
// JSON (schema: axiom, rule, backend, verdict, counterexample, seed,
// sample_size, skipped, conclusive, notes)

template <Quantity T>
std::string report_to_json(const AxiomReport<T>& report, int indent = 2);

template <Quantity T>
std::string matrix_to_json(const AxiomMatrix<T>& matrix, int indent = 2);

struct ReplayOutcome {
  bool has_counterexample = false;
  bool reproduced = false;
  std::string detail;
};

/// Parses a serialized report, rebuilds its counterexample and re-checks it.
ReplayOutcome replay_serialized_report(std::string_view json);

}  // namespace riparian
