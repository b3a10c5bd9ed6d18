#include "riparian/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace riparian {

namespace {

constexpr Axiom kAxiomOrder[] = {
    Axiom::ScaleInvariance,   Axiom::BudgetAdditivity,          Axiom::UpstreamInvariance,
    Axiom::EqualSinglePolluters, Axiom::TopConsistency,          Axiom::EqualTreatmentEqualClaims,
    Axiom::Additivity,        Axiom::MergingSplitting,          Axiom::BudgetLinearity,
    Axiom::Continuity,
};

double floor_of(double v) { return std::floor(v); }
Rational floor_of(const Rational& v) { return floor(v); }

template <Quantity T>
bool is_integral(const T& v) {
  return floor_of(v) == v;
}

template <Quantity T>
T sum_of(const std::vector<T>& values) {
  T total{0};
  for (const T& v : values) total = total + v;
  return total;
}

template <Quantity T>
T min_of(const T& a, const T& b) {
  return b < a ? b : a;
}

template <Quantity T>
std::optional<Problem<T>> try_problem(std::vector<T> claims, T budget) {
  try {
    return validate_problem(std::move(claims), std::move(budget));
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

template <Quantity T>
std::vector<T> claims_of(const Problem<T>& p) {
  return {p.claims().begin(), p.claims().end()};
}

template <Quantity T>
std::vector<T> awards_of(const RuleSpec<T>& rule, const Problem<T>& p) {
  const Allocation<T> x = rule(p);
  return {x.awards().begin(), x.awards().end()};
}

template <Quantity T>
Comparison<T> make_comparison(std::size_t agent, T lhs, T rhs) {
  T diff = NumericTraits<T>::abs(lhs - rhs);
  return {agent, std::move(lhs), std::move(rhs), std::move(diff)};
}

template <Quantity T>
T from_double(double v) {
  return NumericTraits<T>::parse(NumericTraits<double>::to_string(v));
}

std::uint64_t stream_seed(std::uint64_t seed, Axiom axiom) {
  // splitmix64 finaliser over (seed, axiom) so each checker draws its own
  // stream regardless of the order checks run in.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(axiom) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool is_redistribution_axiom(Axiom axiom) {
  return axiom == Axiom::UpstreamInvariance || axiom == Axiom::TopConsistency;
}

bool is_shrinkable(Axiom axiom) {
  return axiom != Axiom::EqualSinglePolluters && axiom != Axiom::MergingSplitting && axiom != Axiom::Continuity;
}

std::string describe(Axiom axiom) {
  switch (axiom) {
    case Axiom::ScaleInvariance: return "phi(mu*c, mu*E) vs mu*phi(c, E)";
    case Axiom::BudgetAdditivity: return "phi(c, E) vs phi(c, E') + phi(c, E - E')";
    case Axiom::UpstreamInvariance: return "phi_k(c, C) vs phi_k(c + delta*e_i, C + delta) for k < i";
    case Axiom::EqualSinglePolluters: return "phi_i(E*e_i, E) vs phi_j(E*e_j, E)";
    case Axiom::TopConsistency: return "phi_k(c, E) vs phi_{k-1}((c_2 + c_1 - phi_1, c_3, ...), E - phi_1)";
    case Axiom::EqualTreatmentEqualClaims: return "phi_i(c, E) vs phi_j(c, E) with c_i = c_j";
    case Axiom::Additivity: return "phi(c + c', E + E') vs phi(c, E) + phi(c', E')";
    case Axiom::MergingSplitting: return "phi_i(u_n) + phi_{i+1}(u_n) vs phi_i(u_{n-1})";
    case Axiom::BudgetLinearity: return "phi(c, alpha*C) vs alpha*phi(c, C)";
    case Axiom::Continuity: return "phi(perturbed problem) vs phi(problem)";
  }
  return {};
}

// --- comparisons -------------------------------------------------------------

template <Quantity T>
using Comparisons = std::optional<std::vector<Comparison<T>>>;

template <Quantity T>
void require_shape(const Witness<T>& w, std::size_t problems, std::size_t scalars, std::size_t indices) {
  if (w.problems.size() < problems || w.scalars.size() < scalars || w.indices.size() < indices) {
    throw std::invalid_argument("witness does not match the axiom's shape");
  }
}

template <Quantity T>
Comparisons<T> compare_scale(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 1, 1, 0);
  const Problem<T>& p = w.problems[0];
  const T& mu = w.scalars[0];
  if (!(T{0} < mu)) return std::nullopt;
  std::vector<T> scaled = claims_of(p);
  for (T& c : scaled) c = mu * c;
  const auto q = try_problem(std::move(scaled), mu * p.budget());
  if (!q) return std::nullopt;
  const auto lhs = awards_of(rule, *q);
  const auto base = awards_of(rule, p);
  std::vector<Comparison<T>> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(make_comparison(i, lhs[i], mu * base[i]));
  return out;
}

template <Quantity T>
Comparisons<T> compare_budget_additivity(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 1, 1, 0);
  const Problem<T>& p = w.problems[0];
  const T& first = w.scalars[0];
  const auto p1 = try_problem(claims_of(p), first);
  const auto p2 = try_problem(claims_of(p), p.budget() - first);
  if (!p1 || !p2) return std::nullopt;
  const auto whole = awards_of(rule, p);
  const auto a = awards_of(rule, *p1);
  const auto b = awards_of(rule, *p2);
  std::vector<Comparison<T>> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(make_comparison(i, whole[i], a[i] + b[i]));
  return out;
}

template <Quantity T>
Comparisons<T> compare_upstream(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 1, 1, 1);
  const Problem<T>& p = w.problems[0];
  const std::size_t i = w.indices[0];
  const T& delta = w.scalars[0];
  if (!is_redistribution(p) || i >= p.size() || !(T{0} < delta)) return std::nullopt;
  std::vector<T> raised = claims_of(p);
  raised[i] = raised[i] + delta;
  const T budget = sum_of(raised);
  const auto q = try_problem(std::move(raised), budget);
  if (!q) return std::nullopt;
  const auto before = awards_of(rule, p);
  const auto after = awards_of(rule, *q);
  std::vector<Comparison<T>> out;
  for (std::size_t k = 0; k < i; ++k) out.push_back(make_comparison(k, before[k], after[k]));
  return out;
}

template <Quantity T>
Comparisons<T> compare_single_polluters(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 2, 0, 2);
  const std::size_t i = w.indices[0];
  const std::size_t j = w.indices[1];
  const Problem<T>& pi = w.problems[0];
  const Problem<T>& pj = w.problems[1];
  if (i >= pi.size() || j >= pj.size() || pi.size() != pj.size()) return std::nullopt;
  return std::vector<Comparison<T>>{make_comparison(j, rule(pi)[i], rule(pj)[j])};
}

template <Quantity T>
Comparisons<T> compare_top_consistency(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 1, 0, 0);
  const Problem<T>& p = w.problems[0];
  if (p.size() < 2 || !is_redistribution(p)) return std::nullopt;
  const auto x = awards_of(rule, p);
  if (!NumericTraits<T>::less_or_equal(x[0], p.claim(0))) return std::nullopt;
  std::vector<T> reduced(p.claims().begin() + 1, p.claims().end());
  reduced[0] = reduced[0] + (p.claim(0) - x[0]);
  if (reduced[0] < T{0}) reduced[0] = T{0};  // float noise when φ_1 = c_1
  T budget = p.budget() - x[0];
  if constexpr (!NumericTraits<T>::exact) budget = sum_of(reduced);
  const auto q = try_problem(std::move(reduced), budget);
  if (!q) return std::nullopt;
  const auto y = awards_of(rule, *q);
  std::vector<Comparison<T>> out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(make_comparison(k, x[k], y[k - 1]));
  return out;
}

template <Quantity T>
Comparisons<T> compare_equal_claims(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 1, 0, 0);
  const Problem<T>& p = w.problems[0];
  const auto x = awards_of(rule, p);
  std::vector<Comparison<T>> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p.claim(i) == p.claim(j)) out.push_back(make_comparison(j, x[i], x[j]));
    }
  }
  return out;
}

template <Quantity T>
Comparisons<T> compare_additivity(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 2, 0, 0);
  const Problem<T>& p = w.problems[0];
  const Problem<T>& q = w.problems[1];
  if (p.size() != q.size()) return std::nullopt;
  std::vector<T> combined = claims_of(p);
  for (std::size_t i = 0; i < combined.size(); ++i) combined[i] = combined[i] + q.claim(i);
  const auto pq = try_problem(std::move(combined), p.budget() + q.budget());
  if (!pq) return std::nullopt;
  const auto joint = awards_of(rule, *pq);
  const auto a = awards_of(rule, p);
  const auto b = awards_of(rule, q);
  std::vector<Comparison<T>> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(make_comparison(i, joint[i], a[i] + b[i]));
  return out;
}

template <Quantity T>
Comparisons<T> compare_merging(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 2, 0, 1);
  const Problem<T>& un = w.problems[0];
  const Problem<T>& prev = w.problems[1];
  const std::size_t i = w.indices[0];
  if (un.size() != prev.size() + 1 || i + 1 >= un.size()) return std::nullopt;
  const auto x = awards_of(rule, un);
  const auto y = awards_of(rule, prev);
  return std::vector<Comparison<T>>{make_comparison(i, x[i] + x[i + 1], y[i])};
}

template <Quantity T>
Comparisons<T> compare_linearity(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 1, 1, 0);
  const Problem<T>& p = w.problems[0];
  const T& alpha = w.scalars[0];
  if (alpha < T{0} || T{1} < alpha) return std::nullopt;
  const auto full = try_problem(claims_of(p), p.aggregate());
  const auto part = try_problem(claims_of(p), alpha * p.aggregate());
  if (!full || !part) return std::nullopt;
  const auto lhs = awards_of(rule, *part);
  const auto rhs = awards_of(rule, *full);
  std::vector<Comparison<T>> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(make_comparison(i, lhs[i], alpha * rhs[i]));
  return out;
}

template <Quantity T>
Comparisons<T> compare_continuity(const RuleSpec<T>& rule, const Witness<T>& w) {
  require_shape(w, 1, 2, 1);
  const Problem<T>& p = w.problems[0];
  const std::size_t coordinate = w.indices[0];
  const T& eps = w.scalars[0];
  if (coordinate > p.size()) return std::nullopt;
  const auto base = awards_of(rule, p);
  std::vector<Comparison<T>> out;
  for (const T& sign : {T{1}, T{-1}}) {
    std::vector<T> claims = claims_of(p);
    T budget = p.budget();
    if (coordinate < p.size()) {
      claims[coordinate] = claims[coordinate] + sign * eps;
      if (claims[coordinate] < T{0}) claims[coordinate] = T{0};
    } else {
      budget = budget + sign * eps;
      if (budget < T{0}) budget = T{0};
    }
    budget = min_of(budget, sum_of(claims));
    const auto q = try_problem(std::move(claims), budget);
    if (!q) continue;
    const auto moved = awards_of(rule, *q);
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(make_comparison(i, moved[i], base[i]));
  }
  return out;
}

template <Quantity T>
std::optional<Comparison<T>> worst_violation(const std::vector<Comparison<T>>& comparisons, const T& threshold) {
  std::optional<Comparison<T>> worst;
  for (const auto& c : comparisons) {
    if (threshold < c.difference && (!worst || worst->difference < c.difference)) worst = c;
  }
  return worst;
}

// --- witnesses ---------------------------------------------------------------

template <Quantity T>
Problem<T> unit_problem(std::size_t n, std::size_t polluter, T amount) {
  std::vector<T> claims(n, T{0});
  claims[polluter] = amount;
  return validate_problem(std::move(claims), std::move(amount));
}

template <Quantity T>
std::vector<Witness<T>> build_witnesses(Axiom axiom, const CheckConfig& config) {
  GeneratorConfig gen_config = config.generator;
  if (is_redistribution_axiom(axiom)) gen_config.redistribution_only = true;
  if (axiom == Axiom::TopConsistency || axiom == Axiom::EqualTreatmentEqualClaims) {
    gen_config.min_agents = std::max<std::size_t>(gen_config.min_agents, 2);
    gen_config.max_agents = std::max(gen_config.max_agents, gen_config.min_agents);
  }
  ProblemGenerator<T> gen(stream_seed(config.seed, axiom), gen_config);
  std::vector<Witness<T>> out;

  switch (axiom) {
    case Axiom::ScaleInvariance:
      for (std::size_t s = 0; s < config.samples; ++s) {
        Problem<T> p = gen.next();
        out.push_back({{std::move(p)}, {gen.fraction(1, 100, 10)}, {}});
      }
      break;
    case Axiom::BudgetAdditivity:
      for (std::size_t s = 0; s < config.samples; ++s) {
        Problem<T> p = gen.next();
        T first = p.budget() * gen.fraction(0, 1000, 1000);
        out.push_back({{std::move(p)}, {std::move(first)}, {}});
      }
      break;
    case Axiom::UpstreamInvariance:
      for (std::size_t s = 0; s < config.samples; ++s) {
        Problem<T> p = gen.next();
        const std::size_t i = gen.index(0, p.size() - 1);
        out.push_back({{std::move(p)}, {gen.fraction(1, 1000, 100)}, {i}});
      }
      break;
    case Axiom::EqualSinglePolluters: {
      const std::size_t lo = std::max<std::size_t>(2, gen_config.min_agents);
      const std::size_t hi = std::max(lo, gen_config.max_agents);
      const long amount_hi = std::max(1L, std::lround(gen_config.claim_max * 100));
      for (std::size_t s = 0; s < config.samples; ++s) {
        const std::size_t n = gen.index(lo, hi);
        const std::size_t last_position = config.extended_positions ? n - 1 : n - 2;
        const std::size_t i = gen.index(0, last_position);
        std::size_t j = gen.index(0, last_position);
        if (last_position > 0) {
          while (j == i) j = gen.index(0, last_position);
        }
        const T amount = gen.fraction(1, amount_hi, 100);
        out.push_back({{unit_problem(n, i, amount), unit_problem(n, j, amount)}, {}, {i, j}});
      }
      break;
    }
    case Axiom::TopConsistency:
      for (std::size_t s = 0; s < config.samples; ++s) out.push_back({{gen.next()}, {}, {}});
      break;
    case Axiom::EqualTreatmentEqualClaims:
      while (out.size() < config.samples) {
        const Problem<T> p = gen.next();
        const std::size_t i = gen.index(0, p.size() - 1);
        std::size_t j = gen.index(0, p.size() - 1);
        while (j == i) j = gen.index(0, p.size() - 1);
        std::vector<T> claims = claims_of(p);
        claims[j] = claims[i];
        const T aggregate = sum_of(claims);
        auto q = try_problem(claims, aggregate * (p.budget() / p.aggregate()));
        if (!q) continue;
        out.push_back({{std::move(*q)}, {}, {std::min(i, j), std::max(i, j)}});
      }
      break;
    case Axiom::Additivity: {
      // The two-problem construction used to pin Γ ≡ 0 under additivity.
      out.push_back({{validate_problem<T>({T{2}, T{0}, T{0}}, T{1}), validate_problem<T>({T{0}, T{1}, T{0}}, T{1})},
                     {},
                     {}});
      for (std::size_t s = 1; s < config.samples; ++s) {
        Problem<T> p = gen.next();
        Problem<T> q = gen.next_with_agents(p.size());
        if (s % 2 == 1) {
          // Equal budget-to-claim ratios, the family where proportional is additive.
          q = validate_problem(claims_of(q), q.aggregate() * (p.budget() / p.aggregate()));
        }
        out.push_back({{std::move(p), std::move(q)}, {}, {}});
      }
      break;
    }
    case Axiom::MergingSplitting:
      for (std::size_t n = 2; n <= std::max<std::size_t>(2, config.merging_max_agents); ++n) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
          out.push_back({{unit_problem(n, 0, T{1}), unit_problem(n - 1, 0, T{1})}, {}, {i}});
        }
      }
      break;
    case Axiom::BudgetLinearity:
      for (std::size_t s = 0; s < config.samples; ++s) {
        Problem<T> p = gen.next();
        out.push_back({{std::move(p)}, {gen.fraction(0, 1000, 1000)}, {}});
      }
      break;
    case Axiom::Continuity: {
      const T eps = from_double<T>(config.continuity_epsilon);
      const T bound = from_double<T>(config.lipschitz_bound);
      for (std::size_t s = 0; s < config.samples; ++s) {
        const Problem<T> p = gen.next();
        for (std::size_t coordinate = 0; coordinate <= p.size(); ++coordinate) {
          out.push_back({{p}, {eps, bound}, {coordinate}});
        }
      }
      break;
    }
  }
  return out;
}

// --- shrinking ---------------------------------------------------------------

template <Quantity T>
struct RawProblem {
  std::vector<T> claims;
  T budget;
};

template <Quantity T>
std::optional<Witness<T>> normalize(Axiom axiom, std::vector<RawProblem<T>> raws, std::vector<T> scalars,
                                    std::vector<std::size_t> indices) {
  for (auto& raw : raws) {
    if (is_redistribution_axiom(axiom)) {
      raw.budget = sum_of(raw.claims);
    } else {
      raw.budget = min_of(raw.budget, sum_of(raw.claims));
    }
  }
  if (axiom == Axiom::EqualTreatmentEqualClaims) {
    auto& claims = raws[0].claims;
    if (indices.size() < 2 || indices[1] >= claims.size()) return std::nullopt;
    claims[indices[1]] = claims[indices[0]];
    raws[0].budget = min_of(raws[0].budget, sum_of(claims));
  }
  if (axiom == Axiom::BudgetAdditivity) scalars[0] = min_of(scalars[0], raws[0].budget);
  Witness<T> w;
  for (auto& raw : raws) {
    auto p = try_problem(std::move(raw.claims), std::move(raw.budget));
    if (!p) return std::nullopt;
    w.problems.push_back(std::move(*p));
  }
  w.scalars = std::move(scalars);
  w.indices = std::move(indices);
  return w;
}

template <Quantity T>
std::vector<RawProblem<T>> raw_problems(const Witness<T>& w) {
  std::vector<RawProblem<T>> raws;
  for (const auto& p : w.problems) raws.push_back({claims_of(p), p.budget()});
  return raws;
}

template <Quantity T>
std::vector<Witness<T>> shrink_candidates(Axiom axiom, const Witness<T>& w) {
  std::vector<Witness<T>> out;
  const std::size_t n = w.problems.front().size();
  const bool same_size = std::all_of(w.problems.begin(), w.problems.end(),
                                     [&](const Problem<T>& p) { return p.size() == n; });

  // Fewer agents first.
  if (same_size && n > 1) {
    for (std::size_t k = n; k-- > 0;) {
      if (std::find(w.indices.begin(), w.indices.end(), k) != w.indices.end()) continue;
      auto raws = raw_problems(w);
      for (auto& raw : raws) raw.claims.erase(raw.claims.begin() + static_cast<std::ptrdiff_t>(k));
      std::vector<std::size_t> indices = w.indices;
      for (auto& idx : indices) {
        if (idx > k) --idx;
      }
      if (auto c = normalize(axiom, std::move(raws), w.scalars, std::move(indices))) out.push_back(std::move(*c));
    }
  }

  // Then simpler claims: 0, 1, or the integer part.
  for (std::size_t j = 0; j < w.problems.size(); ++j) {
    const auto& p = w.problems[j];
    for (std::size_t k = 0; k < p.size(); ++k) {
      const T& c = p.claim(k);
      for (const T& v : {T{0}, T{1}, floor_of(c)}) {
        if (v == c || (is_integral(c) && !(v < c))) continue;
        auto raws = raw_problems(w);
        raws[j].claims[k] = v;
        if (auto cand = normalize(axiom, std::move(raws), w.scalars, w.indices)) out.push_back(std::move(*cand));
      }
    }
    if (!is_redistribution_axiom(axiom) && !is_integral(p.budget()) && T{1} < p.budget()) {
      auto raws = raw_problems(w);
      raws[j].budget = floor_of(p.budget());
      if (auto cand = normalize(axiom, std::move(raws), w.scalars, w.indices)) out.push_back(std::move(*cand));
    }
  }
  return out;
}

template <Quantity T>
Counterexample<T> shrink(Axiom axiom, const RuleSpec<T>& rule, Counterexample<T> current, std::size_t budget) {
  if (!is_shrinkable(axiom)) return current;
  std::size_t attempts = 0;
  bool improved = true;
  while (improved && attempts < budget) {
    improved = false;
    for (auto& candidate : shrink_candidates(axiom, current.witness)) {
      if (++attempts > budget) break;
      const auto comparisons = compare_witness(axiom, rule, candidate);
      if (!comparisons) continue;
      if (auto worst = worst_violation(*comparisons, violation_threshold(axiom, candidate))) {
        current.witness = std::move(candidate);
        current.comparison = std::move(*worst);
        improved = true;
        break;
      }
    }
  }
  return current;
}

template <Quantity T>
std::string format_param(const T& v) {
  return NumericTraits<T>::to_string(v);
}

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::ScaleInvariance: return "scale-invariance";
    case Axiom::BudgetAdditivity: return "budget-additivity";
    case Axiom::UpstreamInvariance: return "upstream-invariance";
    case Axiom::EqualSinglePolluters: return "equal-single-polluters";
    case Axiom::TopConsistency: return "top-consistency";
    case Axiom::EqualTreatmentEqualClaims: return "equal-claims";
    case Axiom::Additivity: return "additivity";
    case Axiom::MergingSplitting: return "merging-splitting";
    case Axiom::BudgetLinearity: return "budget-linearity";
    case Axiom::Continuity: return "continuity";
  }
  return "unknown";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : kAxiomOrder) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> axioms(std::begin(kAxiomOrder), std::end(kAxiomOrder));
  return axioms;
}

const std::vector<Axiom>& matrix_axioms() {
  static const std::vector<Axiom> axioms(std::begin(kAxiomOrder), std::end(kAxiomOrder) - 1);
  return axioms;
}

std::string_view verdict_name(Verdict verdict) {
  return verdict == Verdict::Violated ? "violated" : "satisfied-on-sample";
}

// --- generator -----------------------------------------------------------------

template <Quantity T>
ProblemGenerator<T>::ProblemGenerator(std::uint64_t seed, GeneratorConfig config) : config_(config) {
  if (config_.min_agents < 1 || config_.min_agents > config_.max_agents) {
    throw std::invalid_argument("generator needs 1 <= min_agents <= max_agents");
  }
  if (config_.claim_min < 0 || config_.claim_min > config_.claim_max || !(config_.claim_max > 0)) {
    throw std::invalid_argument("generator needs 0 <= claim_min <= claim_max and claim_max > 0");
  }
  if (config_.zero_claim_probability < 0 || config_.zero_claim_probability > 1) {
    throw std::invalid_argument("zero_claim_probability must lie in [0, 1]");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
  claim_lo_ = std::lround(config_.claim_min * 100);
  claim_hi_ = std::lround(config_.claim_max * 100);
}

template <Quantity T>
T ProblemGenerator<T>::fraction(long lo, long hi, long denominator) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return NumericTraits<T>::ratio(dist(engine_), denominator);
}

template <Quantity T>
std::size_t ProblemGenerator<T>::index(std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> dist(lo, hi);
  return dist(engine_);
}

template <Quantity T>
T ProblemGenerator<T>::draw_claim() {
  std::bernoulli_distribution zero(config_.zero_claim_probability);
  if (zero(engine_)) return T{0};
  return fraction(claim_lo_, claim_hi_, 100);
}

template <Quantity T>
Problem<T> ProblemGenerator<T>::next() {
  return next_with_agents(index(config_.min_agents, config_.max_agents));
}

template <Quantity T>
Problem<T> ProblemGenerator<T>::next_with_agents(std::size_t agents) {
  if (agents == 0) throw std::invalid_argument("at least one agent");
  std::vector<T> claims;
  claims.reserve(agents);
  for (std::size_t i = 0; i < agents; ++i) claims.push_back(draw_claim());
  T aggregate = sum_of(claims);
  if (!(T{0} < aggregate)) {
    const std::size_t k = index(0, agents - 1);
    claims[k] = fraction(std::max(claim_lo_, 1L), std::max(claim_hi_, 1L), 100);
    aggregate = claims[k];
  }
  T budget = config_.redistribution_only ? aggregate : aggregate * fraction(0, 1000, 1000);
  return validate_problem(std::move(claims), std::move(budget));
}

// --- checks --------------------------------------------------------------------

template <Quantity T>
std::optional<std::vector<Comparison<T>>> compare_witness(Axiom axiom, const RuleSpec<T>& rule, const Witness<T>& w) {
  switch (axiom) {
    case Axiom::ScaleInvariance: return compare_scale(rule, w);
    case Axiom::BudgetAdditivity: return compare_budget_additivity(rule, w);
    case Axiom::UpstreamInvariance: return compare_upstream(rule, w);
    case Axiom::EqualSinglePolluters: return compare_single_polluters(rule, w);
    case Axiom::TopConsistency: return compare_top_consistency(rule, w);
    case Axiom::EqualTreatmentEqualClaims: return compare_equal_claims(rule, w);
    case Axiom::Additivity: return compare_additivity(rule, w);
    case Axiom::MergingSplitting: return compare_merging(rule, w);
    case Axiom::BudgetLinearity: return compare_linearity(rule, w);
    case Axiom::Continuity: return compare_continuity(rule, w);
  }
  return std::nullopt;
}

template <Quantity T>
T violation_threshold(Axiom axiom, const Witness<T>& witness) {
  if (axiom == Axiom::Continuity) {
    require_shape(witness, 1, 2, 1);
    return witness.scalars[0] * witness.scalars[1];
  }
  return NumericTraits<T>::violation_tolerance();
}

template <Quantity T>
bool replay(Axiom axiom, const RuleSpec<T>& rule, const Counterexample<T>& counterexample) {
  const auto comparisons = compare_witness(axiom, rule, counterexample.witness);
  if (!comparisons) return false;
  return worst_violation(*comparisons, violation_threshold(axiom, counterexample.witness)).has_value();
}

template <Quantity T>
AxiomReport<T> check_axiom(Axiom axiom, const RuleSpec<T>& rule, const CheckConfig& config) {
  AxiomReport<T> report;
  report.axiom = axiom;
  report.rule = rule.name();
  report.seed = config.seed;
  report.backend = std::string(NumericTraits<T>::backend_name);
  switch (axiom) {
    case Axiom::EqualSinglePolluters:
      report.notes.push_back(config.extended_positions ? "positions 1..n (extended mode, mouth included)"
                                                       : "positions 1..n-1 (mouth excluded)");
      break;
    case Axiom::MergingSplitting:
      report.notes.push_back("unit problems u_2..u_" + std::to_string(config.merging_max_agents));
      break;
    case Axiom::Continuity: {
      report.conclusive = false;
      std::ostringstream os;
      os << "heuristic only: perturbations of +/-" << config.continuity_epsilon << " flagged above "
         << config.lipschitz_bound << " x epsilon";
      report.notes.push_back(os.str());
      break;
    }
    default:
      break;
  }

  for (auto& witness : build_witnesses<T>(axiom, config)) {
    ++report.sample_size;
    const auto comparisons = compare_witness(axiom, rule, witness);
    if (!comparisons) {
      ++report.skipped;
      continue;
    }
    if (auto worst = worst_violation(*comparisons, violation_threshold(axiom, witness))) {
      Counterexample<T> found{std::move(witness), std::move(*worst), describe(axiom)};
      report.counterexample = shrink(axiom, rule, std::move(found), config.shrink_attempts);
      report.verdict = Verdict::Violated;
      break;
    }
  }
  if (report.skipped > 0 && axiom == Axiom::TopConsistency) {
    report.notes.push_back(std::to_string(report.skipped) + " instance(s) skipped: phi_1 > c_1 or empty reduced problem");
  }
  return report;
}

template <Quantity T>
AxiomMatrix<T> axiom_matrix(const std::vector<RuleSpec<T>>& rules, const CheckConfig& config, std::vector<Axiom> axioms) {
  if (axioms.empty()) axioms = matrix_axioms();
  AxiomMatrix<T> matrix;
  matrix.axioms = axioms;
  for (const auto& rule : rules) {
    matrix.rules.push_back(rule.name());
    std::vector<AxiomReport<T>> row;
    row.reserve(axioms.size());
    for (Axiom a : axioms) row.push_back(check_axiom(a, rule, config));
    matrix.reports.push_back(std::move(row));
  }
  return matrix;
}

template <Quantity T>
std::string render_axiom_matrix(const AxiomMatrix<T>& matrix) {
  std::size_t axiom_width = 6;
  for (Axiom a : matrix.axioms) axiom_width = std::max(axiom_width, axiom_name(a).size());
  std::vector<std::size_t> widths;
  for (const auto& r : matrix.rules) widths.push_back(std::max<std::size_t>(r.size(), 3));

  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(axiom_width)) << "axiom";
  for (std::size_t r = 0; r < matrix.rules.size(); ++r) {
    os << "  " << std::setw(static_cast<int>(widths[r])) << matrix.rules[r];
  }
  os << '\n';
  for (std::size_t a = 0; a < matrix.axioms.size(); ++a) {
    os << std::setw(static_cast<int>(axiom_width)) << axiom_name(matrix.axioms[a]);
    for (std::size_t r = 0; r < matrix.rules.size(); ++r) {
      const auto& report = matrix.reports[r][a];
      std::string cell = report.verdict == Verdict::Violated ? "N" : "Y";
      if (!report.conclusive) cell += "?";
      os << "  " << std::setw(static_cast<int>(widths[r])) << cell;
    }
    os << '\n';
  }
  return os.str();
}

#define RIPARIAN_INSTANTIATE_AXIOMS(T)                                                                         \
  template class ProblemGenerator<T>;                                                                          \
  template std::optional<std::vector<Comparison<T>>> compare_witness(Axiom, const RuleSpec<T>&, const Witness<T>&); \
  template T violation_threshold(Axiom, const Witness<T>&);                                                     \
  template bool replay(Axiom, const RuleSpec<T>&, const Counterexample<T>&);                                   \
  template AxiomReport<T> check_axiom(Axiom, const RuleSpec<T>&, const CheckConfig&);                          \
  template AxiomMatrix<T> axiom_matrix(const std::vector<RuleSpec<T>>&, const CheckConfig&, std::vector<Axiom>); \
  template std::string render_axiom_matrix(const AxiomMatrix<T>&);

RIPARIAN_INSTANTIATE_AXIOMS(double)
RIPARIAN_INSTANTIATE_AXIOMS(Rational)

#undef RIPARIAN_INSTANTIATE_AXIOMS

}  // namespace riparian
