#include <gtest/gtest.h>

#include "generators.hpp"
#include "riparian/axioms.hpp"

namespace riparian {
namespace {

using R = Rational;

std::vector<R> rationals(std::initializer_list<const char*> texts) {
  std::vector<R> out;
  for (const char* t : texts) out.push_back(R::parse(t));
  return out;
}

Problem<R> problem(std::initializer_list<const char*> claims, const char* budget) {
  return validate_problem(rationals(claims), R::parse(budget));
}

Problem<R> unit(std::size_t n) {
  std::vector<R> c(n, R(0));
  c[0] = R(1);
  return validate_problem(std::move(c), R(1));
}

RuleSpec<R> rule(const char* text) { return RuleSpec<R>::parse(text); }

bool holds(Axiom axiom, const char* rule_text, const Witness<R>& w) {
  const auto comparisons = compare_witness(axiom, rule(rule_text), w);
  EXPECT_TRUE(comparisons.has_value()) << "precondition failed for " << axiom_name(axiom);
  if (!comparisons) return false;
  for (const auto& c : *comparisons) {
    if (c.difference != R(0)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hand-evaluated witnesses for each checker

TEST(AxiomWitness, ScaleInvariance) {
  const Witness<R> w{{problem({"2", "5", "5", "3"}, "5")}, {R(3)}, {}};
  const auto cmp = *compare_witness(Axiom::ScaleInvariance, rule("geometric:1/2"), w);
  EXPECT_EQ(cmp[0].lhs, R(1));
  EXPECT_EQ(cmp[3].lhs, R(7));
  EXPECT_TRUE(holds(Axiom::ScaleInvariance, "geometric:1/2", w));
  EXPECT_TRUE(holds(Axiom::ScaleInvariance, "prop", w));
  EXPECT_TRUE(holds(Axiom::ScaleInvariance, "averaging:1/3", {{problem({"1", "9"}, "2")}, {R(1)}, {}}));
}

TEST(AxiomWitness, BudgetAdditivity) {
  EXPECT_TRUE(holds(Axiom::BudgetAdditivity, "geometric:1/2", {{problem({"2", "5", "5", "3"}, "5")}, {R(2)}, {}}));
  EXPECT_TRUE(holds(Axiom::BudgetAdditivity, "geometric:1/2", {{problem({"2", "5", "5", "3"}, "5")}, {R(0)}, {}}));
  const Witness<R> tuojiang{{problem({"4.17", "53.98", "2.13", "3.30", "2.48", "15.18"}, "64.3")}, {R::parse("32.15")}, {}};
  EXPECT_TRUE(holds(Axiom::BudgetAdditivity, "averaging:1/4", tuojiang));
}

TEST(AxiomWitness, UpstreamInvariance) {
  const Witness<R> w{{problem({"2", "5", "5", "3"}, "15")}, {R(3)}, {2}};
  const auto cmp = *compare_witness(Axiom::UpstreamInvariance, rule("geometric:1/2"), w);
  ASSERT_EQ(cmp.size(), 2u);
  EXPECT_EQ(cmp[0].lhs, R(1));
  EXPECT_EQ(cmp[1].lhs, R(3));
  EXPECT_TRUE(holds(Axiom::UpstreamInvariance, "geometric:1/2", w));
  EXPECT_TRUE(holds(Axiom::UpstreamInvariance, "averaging:1/2", w));
  EXPECT_TRUE(compare_witness(Axiom::UpstreamInvariance, rule("prop"),
                              Witness<R>{{problem({"2", "5"}, "7")}, {R(1)}, {0}})->empty());
  EXPECT_FALSE(compare_witness(Axiom::UpstreamInvariance, rule("prop"),
                               Witness<R>{{problem({"2", "5"}, "3")}, {R(1)}, {1}}));
}

TEST(AxiomWitness, EqualSinglePolluters) {
  const auto at = [](std::size_t i) {
    std::vector<R> c(4, R(0));
    c[i] = R(8);
    return validate_problem(std::move(c), R(8));
  };
  const Witness<R> first_third{{at(0), at(2)}, {}, {0, 2}};
  const auto cmp = *compare_witness(Axiom::EqualSinglePolluters, rule("geometric:1/2"), first_third);
  EXPECT_EQ(cmp[0].lhs, R(4));
  EXPECT_EQ(cmp[0].rhs, R(4));
  const Witness<R> with_mouth{{at(0), at(3)}, {}, {0, 3}};
  EXPECT_FALSE(holds(Axiom::EqualSinglePolluters, "geometric:1/2", with_mouth));
  EXPECT_TRUE(holds(Axiom::EqualSinglePolluters, "prop", with_mouth));
}

TEST(AxiomWitness, TopConsistency) {
  EXPECT_TRUE(holds(Axiom::TopConsistency, "geometric:1/2", {{problem({"2", "5", "5", "3"}, "15")}, {}, {}}));
  const auto cmp = *compare_witness(Axiom::TopConsistency, rule("averaging:1/2"),
                                    Witness<R>{{problem({"2", "2", "2"}, "6")}, {}, {}});
  EXPECT_EQ(cmp[0].lhs, R(1));
  EXPECT_EQ(cmp[0].rhs, R(3, 2));
  EXPECT_TRUE(holds(Axiom::TopConsistency, "averaging:1/2", {{problem({"3", "1"}, "4")}, {}, {}}));
  // Non-redistribution instances and φ_1 > c_1 fail the precondition.
  EXPECT_FALSE(compare_witness(Axiom::TopConsistency, rule("prop"), Witness<R>{{problem({"2", "2"}, "3")}, {}, {}}));
}

TEST(AxiomWitness, EqualTreatmentOfEqualClaims) {
  const auto cmp = *compare_witness(Axiom::EqualTreatmentEqualClaims, rule("prop"),
                                    Witness<R>{{problem({"3", "7", "3"}, "6")}, {}, {}});
  ASSERT_EQ(cmp.size(), 1u);
  EXPECT_EQ(cmp[0].lhs, R(18, 13));
  EXPECT_EQ(cmp[0].rhs, R(18, 13));
  EXPECT_FALSE(holds(Axiom::EqualTreatmentEqualClaims, "geometric:1/2", {{problem({"1", "1"}, "2")}, {}, {}}));
  EXPECT_FALSE(holds(Axiom::EqualTreatmentEqualClaims, "ft", {{problem({"2", "2"}, "4")}, {}, {}}));
}

TEST(AxiomWitness, Additivity) {
  const Witness<R> fixture{{problem({"2", "0", "0"}, "1"), problem({"0", "1", "0"}, "1")}, {}, {}};
  const auto cmp = *compare_witness(Axiom::Additivity, rule("geometric:1/2"), fixture);
  EXPECT_EQ(cmp[0].lhs, R(2, 3));
  EXPECT_EQ(cmp[0].rhs, R(1, 2));
  EXPECT_TRUE(holds(Axiom::Additivity, "ft", fixture));
  EXPECT_TRUE(holds(Axiom::Additivity, "prop", {{problem({"2", "4"}, "3"), problem({"1", "1"}, "1")}, {}, {}}));
  EXPECT_FALSE(holds(Axiom::Additivity, "prop", {{problem({"2", "4"}, "3"), problem({"1", "1"}, "2")}, {}, {}}));
}

TEST(AxiomWitness, MergingSplitting) {
  for (std::size_t i : {0u, 1u}) {
    EXPECT_TRUE(holds(Axiom::MergingSplitting, "averaging:1/2", {{unit(3), unit(2)}, {}, {i}}));
    EXPECT_TRUE(holds(Axiom::MergingSplitting, "ft", {{unit(3), unit(2)}, {}, {i}}));
  }
  const auto cmp = *compare_witness(Axiom::MergingSplitting, rule("geometric:1/2"), Witness<R>{{unit(3), unit(2)}, {}, {0}});
  EXPECT_EQ(cmp[0].lhs, R(3, 4));
  EXPECT_EQ(cmp[0].rhs, R(1, 2));
}

TEST(AxiomWitness, BudgetLinearity) {
  const Witness<R> w{{problem({"2", "5", "5", "3"}, "15")}, {R(1, 3)}, {}};
  const auto cmp = *compare_witness(Axiom::BudgetLinearity, rule("geometric:1/2"), w);
  EXPECT_EQ(cmp[0].lhs, R(1, 3));
  EXPECT_EQ(cmp[3].lhs, R(7, 3));
  EXPECT_TRUE(holds(Axiom::BudgetLinearity, "geometric:1/2", w));
  EXPECT_TRUE(holds(Axiom::BudgetLinearity, "averaging:3/4", {{problem({"4", "1"}, "5")}, {R(0)}, {}}));
  const auto p = problem({"4.17", "53.98", "2.13", "3.30", "2.48", "15.18"}, "81.24");
  const Witness<R> tuojiang{{p}, {R::parse("64.3") / R::parse("81.24")}, {}};
  EXPECT_TRUE(holds(Axiom::BudgetLinearity, "averaging:3/4", tuojiang));
}

TEST(AxiomWitness, ContinuityFlagsStepRetention) {
  using D = double;
  const auto step = GammaFunction<D>::opaque([](const D& t) { return t < 1 ? 0.0 : t / 2; }, "step");
  const auto spec = RuleSpec<D>::generalized_geometric(step);
  const Counterexample<D> probe{{{validate_problem<D>({1.0, 1.0}, 2.0)}, {1e-6, 1e3}, {0}}, {}, {}};
  EXPECT_TRUE(replay(Axiom::Continuity, spec, probe));
  EXPECT_FALSE(replay(Axiom::Continuity, RuleSpec<D>::geometric(0.5), probe));
  EXPECT_FALSE(replay(Axiom::Continuity, RuleSpec<D>::proportional(), probe));
}

// ---------------------------------------------------------------------------
// Generators

TEST(Generator, SameSeedSameStream) {
  GeneratorConfig config;
  config.min_agents = 2;
  config.max_agents = 6;
  auto a = gen_problems<R>(1, config);
  auto b = gen_problems<R>(1, config);
  auto c = gen_problems<R>(2, config);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto pa = a.next();
    ASSERT_EQ(pa, b.next());
    differs = differs || !(pa == c.next());
    EXPECT_GE(pa.size(), 2u);
    EXPECT_LE(pa.size(), 6u);
  }
  EXPECT_TRUE(differs);
}

TEST(Generator, RedistributionOnly) {
  GeneratorConfig config;
  config.redistribution_only = true;
  auto g = gen_problems<R>(5, config);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(is_redistribution(g.next()));
}

TEST(Generator, BudgetWithinAggregateAndClaimsOnLattice) {
  auto g = gen_problems<R>(6, {});
  for (int i = 0; i < 200; ++i) {
    const auto p = g.next();
    EXPECT_LE(p.budget(), p.aggregate());
    for (const R& c : p.claims()) {
      EXPECT_TRUE((c * R(100)).is_integer());
      EXPECT_LE(c, R(20));
    }
  }
}

TEST(Generator, AllZeroDrawsAreRepaired) {
  GeneratorConfig config;
  config.zero_claim_probability = 1;
  auto g = gen_problems<R>(3, config);
  for (int i = 0; i < 200; ++i) {
    const auto p = g.next();
    EXPECT_GT(p.aggregate(), R(0));
    EXPECT_EQ(std::count_if(p.claims().begin(), p.claims().end(), [](const R& c) { return R(0) < c; }), 1);
  }
}

TEST(Generator, RejectsDegenerateConfig) {
  GeneratorConfig bad;
  bad.min_agents = 5;
  bad.max_agents = 3;
  EXPECT_THROW(gen_problems<R>(1, bad), std::invalid_argument);
  GeneratorConfig zero;
  zero.min_agents = 0;
  EXPECT_THROW(gen_problems<R>(1, zero), std::invalid_argument);
  GeneratorConfig prob;
  prob.zero_claim_probability = 2;
  EXPECT_THROW(gen_problems<R>(1, prob), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Reports

CheckConfig quick(std::size_t samples = 200) {
  CheckConfig config;
  config.samples = samples;
  return config;
}

TEST(AxiomReport, GeometricMergingCounterexampleIsTheThreeAgentUnitProblem) {
  const auto report = check_merging_splitting(rule("geometric:1/2"), quick());
  ASSERT_EQ(report.verdict, Verdict::Violated);
  const auto& w = report.counterexample->witness;
  EXPECT_EQ(w.problems[0], unit(3));
  EXPECT_EQ(w.problems[1], unit(2));
  EXPECT_TRUE(replay(Axiom::MergingSplitting, rule("geometric:1/2"), *report.counterexample));
}

TEST(AxiomReport, AveragingTopConsistencyCounterexampleShrinks) {
  const auto report = check_top_consistency(rule("averaging:1/2"), quick());
  ASSERT_EQ(report.verdict, Verdict::Violated);
  const auto& ce = *report.counterexample;
  EXPECT_TRUE(replay(Axiom::TopConsistency, rule("averaging:1/2"), ce));
  const auto& p = ce.witness.problems.at(0);
  EXPECT_LE(p.size(), 3u);
  for (const R& c : p.claims()) EXPECT_TRUE(c.is_integer()) << c;
  EXPECT_NE(ce.comparison.lhs, ce.comparison.rhs);
  EXPECT_EQ(ce.comparison.difference, abs(ce.comparison.lhs - ce.comparison.rhs));
}

TEST(AxiomReport, SatisfiedVerdictRecordsSample) {
  const auto report = check_scale_invariance(rule("geometric:1/2"), quick(150));
  EXPECT_EQ(report.verdict, Verdict::SatisfiedOnSample);
  EXPECT_FALSE(report.counterexample.has_value());
  EXPECT_EQ(report.sample_size, 150u);
  EXPECT_EQ(report.seed, 7u);
  EXPECT_EQ(report.backend, "exact");
  EXPECT_TRUE(report.conclusive);
}

TEST(AxiomReport, TopConsistencySkipsCountedNotViolated) {
  const auto report = check_top_consistency(rule("geometric:1/2"), quick());
  EXPECT_EQ(report.verdict, Verdict::SatisfiedOnSample);
  EXPECT_LE(report.skipped, report.sample_size);
}

TEST(AxiomReport, ExtendedPositionsCatchTheMouth) {
  CheckConfig config = quick(100);
  EXPECT_EQ(check_equal_single_polluters(rule("geometric:1/2"), config).verdict, Verdict::SatisfiedOnSample);
  config.extended_positions = true;
  EXPECT_EQ(check_equal_single_polluters(rule("geometric:1/2"), config).verdict, Verdict::Violated);
  EXPECT_EQ(check_equal_single_polluters(rule("prop"), config).verdict, Verdict::SatisfiedOnSample);
}

TEST(AxiomReport, ContinuityHeuristicIsNonConclusive) {
  const auto report = check_continuity_heuristic(rule("geometric:1/2"), quick(50));
  EXPECT_EQ(report.verdict, Verdict::SatisfiedOnSample);
  EXPECT_FALSE(report.conclusive);
  EXPECT_EQ(check_continuity_heuristic(rule("prop"), quick(50)).verdict, Verdict::SatisfiedOnSample);
}

TEST(AxiomReport, DeterministicUnderSeed) {
  for (Axiom a : {Axiom::Additivity, Axiom::TopConsistency, Axiom::EqualTreatmentEqualClaims}) {
    const auto first = report_to_json(check_axiom(a, rule("averaging:1/3"), quick(100)));
    const auto second = report_to_json(check_axiom(a, rule("averaging:1/3"), quick(100)));
    EXPECT_EQ(first, second) << axiom_name(a);
  }
}

TEST(AxiomReport, FloatBackendAgreesOnVerdicts) {
  CheckConfig config = quick(150);
  for (Axiom a : matrix_axioms()) {
    for (const char* text : {"geometric:0.5", "averaging:0.5"}) {
      const auto exact = check_axiom(a, RuleSpec<R>::parse(text), config);
      const auto approx = check_axiom(a, RuleSpec<double>::parse(text), config);
      EXPECT_EQ(exact.verdict, approx.verdict) << axiom_name(a) << " " << text;
      EXPECT_EQ(approx.backend, "float");
    }
  }
}

TEST(AxiomReport, SerializedCounterexamplesReplay) {
  for (const char* text : {"geometric:1/2", "averaging:1/2", "prop", "ft"}) {
    for (Axiom a : matrix_axioms()) {
      const auto report = check_axiom(a, rule(text), quick(100));
      const auto outcome = replay_serialized_report(report_to_json(report));
      EXPECT_EQ(outcome.has_counterexample, report.verdict == Verdict::Violated);
      if (report.verdict == Verdict::Violated) {
        EXPECT_TRUE(outcome.reproduced) << axiom_name(a) << " " << text;
      }
    }
  }
  const auto approx = check_top_consistency(RuleSpec<double>::parse("averaging:0.5"), quick(100));
  EXPECT_TRUE(replay_serialized_report(report_to_json(approx)).reproduced);
}

TEST(AxiomReport, TamperedCounterexampleNoLongerReplays) {
  const auto report = check_merging_splitting(rule("geometric:1/2"), quick());
  std::string text = report_to_json(report);
  const auto at = text.find("\"rule\": \"geometric:1/2\"");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 23, "\"rule\": \"geometric:1\"  ");
  EXPECT_FALSE(replay_serialized_report(text).reproduced);
}

TEST(AxiomNames, RoundTrip) {
  for (Axiom a : all_axioms()) EXPECT_EQ(parse_axiom(axiom_name(a)), a);
  EXPECT_FALSE(parse_axiom("monotonicity").has_value());
  EXPECT_EQ(all_axioms().size(), matrix_axioms().size() + 1);
}

// ---------------------------------------------------------------------------
// The satisfy/violate grid

TEST(AxiomMatrix, FamilyRepresentativesAndEndpoints) {
  const std::vector<RuleSpec<R>> rules = {rule("geometric:1/2"), rule("averaging:1/2"), rule("prop"), rule("ft")};
  const auto m = axiom_matrix(rules);
  const auto verdict = [&](std::size_t r, Axiom a) {
    const auto pos = std::find(m.axioms.begin(), m.axioms.end(), a) - m.axioms.begin();
    return m.reports[r][static_cast<std::size_t>(pos)].verdict == Verdict::Violated ? 'N' : 'Y';
  };
  using A = Axiom;
  for (A a : {A::ScaleInvariance, A::BudgetAdditivity, A::EqualSinglePolluters, A::UpstreamInvariance,
              A::TopConsistency, A::BudgetLinearity}) {
    EXPECT_EQ(verdict(0, a), 'Y') << axiom_name(a);
  }
  EXPECT_EQ(verdict(0, A::MergingSplitting), 'N');
  EXPECT_EQ(verdict(0, A::Additivity), 'N');
  EXPECT_EQ(verdict(0, A::EqualTreatmentEqualClaims), 'N');
  EXPECT_EQ(verdict(1, A::MergingSplitting), 'Y');
  EXPECT_EQ(verdict(1, A::TopConsistency), 'N');
  for (A a : m.axioms) {
    EXPECT_EQ(verdict(2, a), a == A::Additivity ? 'N' : 'Y') << "prop " << axiom_name(a);
    EXPECT_EQ(verdict(3, a), a == A::EqualTreatmentEqualClaims ? 'N' : 'Y') << "ft " << axiom_name(a);
  }
  for (const auto& row : m.reports) {
    for (const auto& report : row) {
      if (report.verdict == Verdict::Violated) {
        EXPECT_TRUE(replay(report.axiom, RuleSpec<R>::parse(report.rule), *report.counterexample));
      }
    }
  }
  const std::string grid = render_axiom_matrix(m);
  EXPECT_NE(grid.find("merging-splitting"), std::string::npos);
  EXPECT_NE(grid.find("geometric:1/2"), std::string::npos);
}

}  // namespace
}  // namespace riparian
