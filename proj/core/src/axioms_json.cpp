#include "json.hpp"

#include "riparian/axioms.hpp"

namespace riparian {

namespace {

using nlohmann::json;

template <Quantity T>
json witness_to_json(const Witness<T>& w) {
  json problems = json::array();
  for (const auto& p : w.problems) {
    json claims = json::array();
    for (const T& c : p.claims()) claims.push_back(NumericTraits<T>::to_string(c));
    problems.push_back({{"claims", std::move(claims)}, {"budget", NumericTraits<T>::to_string(p.budget())}});
  }
  json scalars = json::array();
  for (const T& s : w.scalars) scalars.push_back(NumericTraits<T>::to_string(s));
  json positions = json::array();
  for (std::size_t i : w.indices) positions.push_back(i + 1);
  return {{"problems", std::move(problems)}, {"scalars", std::move(scalars)}, {"positions", std::move(positions)}};
}

template <Quantity T>
json report_json(const AxiomReport<T>& report) {
  json out = {
      {"axiom", std::string(axiom_name(report.axiom))},
      {"rule", report.rule},
      {"backend", report.backend},
      {"verdict", std::string(verdict_name(report.verdict))},
      {"seed", report.seed},
      {"sample_size", report.sample_size},
      {"skipped", report.skipped},
      {"conclusive", report.conclusive},
      {"notes", report.notes},
  };
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    json c = witness_to_json(ce.witness);
    c["description"] = ce.description;
    c["agent"] = ce.comparison.agent + 1;
    c["lhs"] = NumericTraits<T>::to_string(ce.comparison.lhs);
    c["rhs"] = NumericTraits<T>::to_string(ce.comparison.rhs);
    c["difference"] = NumericTraits<T>::to_string(ce.comparison.difference);
    out["counterexample"] = std::move(c);
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

template <Quantity T>
ReplayOutcome replay_json(const json& doc) {
  ReplayOutcome outcome;
  const json& ce = doc.at("counterexample");
  if (ce.is_null()) {
    outcome.detail = "report carries no counterexample";
    return outcome;
  }
  outcome.has_counterexample = true;
  const auto axiom = parse_axiom(doc.at("axiom").get<std::string>());
  if (!axiom) throw std::invalid_argument("unknown axiom '" + doc.at("axiom").get<std::string>() + "'");
  const RuleSpec<T> rule = RuleSpec<T>::parse(doc.at("rule").get<std::string>());

  Counterexample<T> rebuilt;
  for (const json& p : ce.at("problems")) {
    std::vector<T> claims;
    for (const json& c : p.at("claims")) claims.push_back(parse_quantity<T>(c.get<std::string>()));
    rebuilt.witness.problems.push_back(
        validate_problem(std::move(claims), parse_quantity<T>(p.at("budget").get<std::string>())));
  }
  for (const json& s : ce.at("scalars")) rebuilt.witness.scalars.push_back(parse_quantity<T>(s.get<std::string>()));
  for (const json& i : ce.at("positions")) {
    const auto position = i.get<std::size_t>();
    if (position == 0) throw std::invalid_argument("positions are 1-based");
    rebuilt.witness.indices.push_back(position - 1);
  }
  rebuilt.description = ce.value("description", "");

  const auto comparisons = compare_witness(*axiom, rule, rebuilt.witness);
  if (!comparisons) {
    outcome.detail = "witness no longer meets the axiom's precondition";
    return outcome;
  }
  outcome.reproduced = replay(*axiom, rule, rebuilt);
  const std::size_t agent = ce.at("agent").get<std::size_t>();
  for (const auto& c : *comparisons) {
    if (c.agent + 1 == agent) {
      outcome.detail = "agent " + std::to_string(agent) + ": " + NumericTraits<T>::to_string(c.lhs) + " vs " +
                       NumericTraits<T>::to_string(c.rhs);
      break;
    }
  }
  if (outcome.detail.empty()) outcome.detail = outcome.reproduced ? "violation reproduced" : "no violation";
  return outcome;
}

}  // namespace

template <Quantity T>
std::string report_to_json(const AxiomReport<T>& report, int indent) {
  return report_json(report).dump(indent);
}

template <Quantity T>
std::string matrix_to_json(const AxiomMatrix<T>& matrix, int indent) {
  json axioms = json::array();
  for (Axiom a : matrix.axioms) axioms.push_back(std::string(axiom_name(a)));
  json reports = json::array();
  for (const auto& row : matrix.reports) {
    for (const auto& report : row) reports.push_back(report_json(report));
  }
  return json{{"rules", matrix.rules}, {"axioms", std::move(axioms)}, {"reports", std::move(reports)}}.dump(indent);
}

ReplayOutcome replay_serialized_report(std::string_view text) {
  const json doc = json::parse(text);
  const std::string backend = doc.at("backend").get<std::string>();
  if (backend == NumericTraits<Rational>::backend_name) return replay_json<Rational>(doc);
  if (backend == NumericTraits<double>::backend_name) return replay_json<double>(doc);
  throw std::invalid_argument("unknown backend '" + backend + "'");
}

template std::string report_to_json(const AxiomReport<double>&, int);
template std::string report_to_json(const AxiomReport<Rational>&, int);
template std::string matrix_to_json(const AxiomMatrix<double>&, int);
template std::string matrix_to_json(const AxiomMatrix<Rational>&, int);

}  // namespace riparian
