#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "riparian/rule_spec.hpp"
#include "riparian/rules.hpp"

namespace riparian {
namespace {

using R = Rational;

std::vector<R> rationals(std::initializer_list<const char*> texts) {
  std::vector<R> out;
  for (const char* t : texts) out.push_back(R::parse(t));
  return out;
}

Problem<R> example_problem() { return validate_problem(rationals({"2", "5", "5", "3"}), R(5)); }

TEST(Geometric, FourAgentExampleHalfRetention) {
  const auto x = geometric(example_problem(), GammaParam<R>(R(1, 2)));
  EXPECT_EQ(gen::to_vector(x.awards()), (std::vector<R>{R(1, 3), R(1), R(4, 3), R(7, 3)}));
}

TEST(Geometric, BubbleTraceShowsEachStep) {
  const auto trace = geometric_bubble_trace(example_problem(), GammaParam<R>(R(1, 2)));
  EXPECT_EQ(trace.augmented, rationals({"2", "6", "8", "7"}));
  EXPECT_EQ(trace.retained, rationals({"1", "3", "4", "7"}));
}

TEST(Geometric, AugmentedClaims) {
  const auto c = rationals({"2", "5", "5", "3"});
  EXPECT_EQ(augmented_claims<R>(c, GammaParam<R>(R(1, 2))), rationals({"2", "6", "8", "7"}));
  EXPECT_EQ(augmented_claims<R>(c, GammaParam<R>(R(1))), c);
  EXPECT_EQ(augmented_claims<R>(c, GammaParam<R>(R(0))), rationals({"2", "7", "12", "15"}));
}

TEST(Geometric, SingleAgentTakesBudget) {
  const auto p = validate_problem(rationals({"4"}), R(3));
  for (const char* g : {"0", "1/3", "1"}) {
    EXPECT_EQ(geometric(p, GammaParam<R>(R::parse(g)))[0], R(3));
  }
}

TEST(Rules, ProportionalFullTransferAveraging) {
  const auto p = example_problem();
  EXPECT_EQ(gen::to_vector(proportional(p).awards()), (std::vector<R>{R(2, 3), R(5, 3), R(5, 3), R(1)}));
  EXPECT_EQ(gen::to_vector(full_transfer(p).awards()), (std::vector<R>{R(0), R(0), R(0), R(5)}));
  EXPECT_EQ(gen::to_vector(averaging(p, LambdaParam<R>(R(1, 2))).awards()),
            (std::vector<R>{R(1, 3), R(5, 6), R(5, 6), R(3)}));
}

TEST(Rules, ZeroBudgetGivesZeroAwards) {
  const auto p = validate_problem(rationals({"1", "2", "3"}), R(0));
  for (const char* rule : {"prop", "ft", "geometric:1/3", "averaging:1/2", "gengeo:cap:1"}) {
    const auto x = RuleSpec<R>::parse(rule)(p);
    for (const R& a : x.awards()) EXPECT_EQ(a, R(0)) << rule;
  }
}

TEST(Parameters, OutOfRangeRejected) {
  for (const char* bad : {"-1/10", "11/10"}) {
    try {
      GammaParam<R> g(R::parse(bad));
      FAIL() << bad;
    } catch (const ValidationError& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParameterOutOfRange);
    }
    EXPECT_THROW(LambdaParam<R>(R::parse(bad)), ValidationError);
  }
  EXPECT_NO_THROW(GammaParam<R>(R(0)));
  EXPECT_NO_THROW(GammaParam<R>(R(1)));
}

TEST(GammaFunction, CapRetainsUpToLevel) {
  const auto c = rationals({"2", "5", "5", "3"});
  EXPECT_EQ(generalized_geometric_shares<R>(c, GammaFunction<R>::cap(R(3))), rationals({"2", "3", "3", "7"}));
  const auto p = validate_problem(c, R(5));
  EXPECT_EQ(gen::to_vector(generalized_geometric(p, GammaFunction<R>::cap(R(3))).awards()),
            (std::vector<R>{R(2, 3), R(1), R(1), R(7, 3)}));
}

TEST(GammaFunction, PiecewiseLinearInterpolatesAndExtends) {
  const auto f = parse_gamma_function<R>("pwl:1:1/2,3:1/2,5:3/2");
  EXPECT_EQ(f(R(0)), R(0));
  EXPECT_EQ(f(R(1, 2)), R(1, 4));
  EXPECT_EQ(f(R(1)), R(1, 2));
  EXPECT_EQ(f(R(2)), R(1, 2));
  EXPECT_EQ(f(R(4)), R(1));
  EXPECT_EQ(f(R(9)), R(7, 2));  // tail slope 1/2
  EXPECT_EQ(f.describe(), "pwl:1:1/2,3:1/2,5:3/2");
}

TEST(GammaFunction, DeclaredFamiliesValidatedOnConstruction) {
  for (const char* bad : {"linear:3/2", "linear:-1", "cap:-1", "pwl:1:2", "pwl:2:1,1:1/2", "pwl:1:0,2:3/2",
                          "pwl:", "pwl:1", "quadratic:1", "linear", "linear:x"}) {
    try {
      (void)parse_gamma_function<R>(bad);
      FAIL() << bad;
    } catch (const ValidationError& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidGammaFunction) << bad;
    }
  }
}

TEST(GammaFunction, OpaqueFunctionCheckedAtEvaluation) {
  const auto overshoot = GammaFunction<R>::opaque([](const R& t) { return t + R(1); }, "t+1");
  const auto p = validate_problem(rationals({"1", "1"}), R(1));
  try {
    (void)generalized_geometric(p, overshoot);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::GammaOutOfRange);
  }
  const auto half = GammaFunction<R>::opaque([](const R& t) { return t / R(2); }, "half");
  EXPECT_EQ(gen::to_vector(generalized_geometric(example_problem(), half).awards()),
            gen::to_vector(geometric(example_problem(), GammaParam<R>(R(1, 2))).awards()));
}

TEST(RuleSpec, ParseAndNameRoundTrip) {
  for (const char* text : {"prop", "ft", "geometric:1/2", "averaging:3/4", "gengeo:linear:1/3", "gengeo:cap:2",
                           "gengeo:pwl:1:1/2,2:1"}) {
    EXPECT_EQ(RuleSpec<R>::parse(text).name(), text);
    EXPECT_EQ(RuleSpec<R>::parse(RuleSpec<R>::parse(text).name()).name(), text);
  }
  EXPECT_EQ(RuleSpec<R>::parse("proportional").name(), "prop");
  EXPECT_EQ(RuleSpec<R>::parse("full-transfer").name(), "ft");
  EXPECT_EQ(RuleSpec<R>::parse("geometric:0.5").name(), "geometric:1/2");
  EXPECT_EQ(RuleSpec<double>::parse("geometric:0.5").name(), "geometric:0.5");
}

TEST(RuleSpec, RejectsMalformedRules) {
  for (const char* bad : {"", "geometric", "geometric:", "averaging", "prop:1", "uniform", "gengeo:"}) {
    EXPECT_THROW(RuleSpec<R>::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(RuleSpec<R>::parse("geometric:2"), ValidationError);
}

// ---------------------------------------------------------------------------
// Properties on random instances

TEST(RuleProperties, MatchIndependentOracles) {
  gen::Source src(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = src.problem(1, 12);
    const auto c = gen::to_vector(p.claims());
    const R gamma = src.unit();
    const R lambda = src.unit();
    const auto expected_geo = oracle::geometric_awards(c, p.budget(), gamma);
    ASSERT_EQ(gen::to_vector(geometric(p, GammaParam<R>(gamma)).awards()), expected_geo) << "trial " << trial;
    ASSERT_EQ(gen::to_vector(geometric_bubble_oracle(p, GammaParam<R>(gamma)).awards()), expected_geo);
    ASSERT_EQ(gen::to_vector(proportional(p).awards()), oracle::proportional_awards(c, p.budget()));
    ASSERT_EQ(gen::to_vector(full_transfer(p).awards()), oracle::full_transfer_awards(c.size(), p.budget()));
    ASSERT_EQ(gen::to_vector(averaging(p, LambdaParam<R>(lambda)).awards()),
              oracle::averaging_awards(c, p.budget(), lambda));
  }
}

TEST(RuleProperties, LinearGammaFunctionReducesToGeometric) {
  gen::Source src(202);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = src.problem(1, 12);
    const R gamma = src.unit();
    ASSERT_EQ(generalized_geometric(p, GammaFunction<R>::linear(gamma)), geometric(p, GammaParam<R>(gamma)));
  }
}

TEST(RuleProperties, EndpointsOfBothFamilies) {
  gen::Source src(303);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = src.problem(1, 12);
    EXPECT_EQ(geometric(p, GammaParam<R>(R(1))), proportional(p));
    EXPECT_EQ(geometric(p, GammaParam<R>(R(0))), full_transfer(p));
    EXPECT_EQ(averaging(p, LambdaParam<R>(R(1))), proportional(p));
    EXPECT_EQ(averaging(p, LambdaParam<R>(R(0))), full_transfer(p));
  }
}

TEST(RuleProperties, AwardsScaleLinearlyWithBudget) {
  gen::Source src(404);
  for (int trial = 0; trial < 500; ++trial) {
    const auto full = src.problem(1, 12, true);
    const R C = full.aggregate();
    const R share = src.unit();
    const auto partial = validate_problem(gen::to_vector(full.claims()), C * share);
    const std::vector<RuleSpec<R>> rules = {
        RuleSpec<R>::proportional(), RuleSpec<R>::full_transfer(), RuleSpec<R>::geometric(src.unit()),
        RuleSpec<R>::averaging(src.unit()), RuleSpec<R>::generalized_geometric(GammaFunction<R>::cap(src.unit()))};
    for (const auto& rule : rules) {
      const auto x_full = rule(full);
      const auto x_partial = rule(partial);
      for (std::size_t i = 0; i < full.size(); ++i) ASSERT_EQ(x_partial[i], share * x_full[i]) << rule.name();
    }
  }
}

TEST(RuleProperties, MouthFallsAndSourceRisesWithRetention) {
  gen::Source src(505);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = src.problem(2, 10);
    R lo = src.unit();
    R hi = src.unit();
    if (hi < lo) std::swap(lo, hi);
    const auto x_lo = geometric(p, GammaParam<R>(lo));
    const auto x_hi = geometric(p, GammaParam<R>(hi));
    EXPECT_LE(x_hi[p.size() - 1], x_lo[p.size() - 1]);
    EXPECT_GE(x_hi[0], x_lo[0]);
  }
}

TEST(RuleProperties, FloatBackendTracksExact) {
  gen::Source src(606);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = src.problem(1, 12);
    std::vector<double> c;
    for (const R& v : p.claims()) c.push_back(v.to_double());
    double C = 0;
    for (double v : c) C += v;
    const double E = std::min(C, p.budget().to_double());
    const auto pd = validate_problem(c, E);
    const R gamma = src.unit();
    const auto exact = geometric(p, GammaParam<R>(gamma));
    const auto approx = geometric(pd, GammaParam<double>(gamma.to_double()));
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(approx[i], exact[i].to_double(), 1e-9);
  }
}

TEST(RuleProperties, EveryResultIsAudited) {
  const auto before = allocations_audited();
  (void)geometric(example_problem(), GammaParam<R>(R(1, 2)));
  (void)RuleSpec<R>::parse("averaging:1/4")(example_problem());
  EXPECT_GE(allocations_audited(), before + 2);
}

}  // namespace
}  // namespace riparian
