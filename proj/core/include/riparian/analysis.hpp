#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "riparian/problem.hpp"
#include "riparian/rules.hpp"

namespace riparian {

template <Quantity T>
struct BoundednessCheck {
  bool bounded = true;
  /// max(0, max_i (x_i − c_i))
  T max_excess{0};
  /// Agent with the largest x_i − c_i (0-based).
  std::size_t worst_agent = 0;
};

/// Whether no agent receives more than its claim. Doubles get the 1e-9
/// equality tolerance.
template <Quantity T>
BoundednessCheck<T> claims_bounded(const Problem<T>& p, const Allocation<T>& x) {
  BoundednessCheck<T> out;
  std::optional<T> worst;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const T excess = x[i] - p.claim(i);
    if (!worst || *worst < excess) {
      worst = excess;
      out.worst_agent = i;
    }
    if (!NumericTraits<T>::less_or_equal(x[i], p.claim(i))) out.bounded = false;
  }
  if (T{0} < *worst) out.max_excess = *worst;
  return out;
}

enum class Family { Geometric, Averaging };
std::string family_name(Family family);

struct Interval {
  double lo = 0;
  double hi = 0;
};

struct ThresholdResult {
  Family family = Family::Geometric;
  /// Smallest parameter value for which the rule is claims-bounded.
  double value = 1;
  /// Feasible runs detected on the scan grid (grid resolution).
  std::vector<Interval> feasible_intervals;
  /// Agent whose claim constraint is active just below the threshold; empty
  /// when the threshold is 0.
  std::optional<std::size_t> binding_agent;
  double tolerance = 0;
  bool single_interval = true;
  std::string method;
  std::vector<std::string> warnings;
};

struct ThresholdSearchOptions {
  double grid_step = 1e-3;
  double tolerance = 1e-4;
};

/// Grid scan over [0, 1] followed by bisection on the lower end of the
/// lowest feasible run. Works for either family; the feasible set is not
/// assumed to be an interval.
ThresholdResult search_min_parameter(const Problem<double>& p, Family family, ThresholdSearchOptions options = {});

ThresholdResult min_gamma_claims_bounded(const Problem<double>& p, double tolerance = 1e-4);

/// Closed form. Only the mouth can exceed its claim under an averaging rule:
/// λ* = 0 if E ≤ c_n, otherwise (E − c_n) / (E − (E/C) c_n).
ThresholdResult min_lambda_claims_bounded(const Problem<double>& p);

template <Quantity T>
struct SweepResult {
  std::vector<T> grid;
  /// awards[k][i]: award of agent i under geometric(grid[k]).
  std::vector<std::vector<T>> awards;
};

/// `points` evenly spaced values k/(points−1); exact fractions for Rational.
template <Quantity T>
std::vector<T> uniform_grid(std::size_t points) {
  if (points < 2) throw std::invalid_argument("a grid needs at least 2 points");
  std::vector<T> grid;
  grid.reserve(points);
  const long last = static_cast<long>(points - 1);
  for (long k = 0; k <= last; ++k) grid.push_back(NumericTraits<T>::ratio(k, last));
  return grid;
}

template <Quantity T>
SweepResult<T> sweep_gamma(const Problem<T>& p, std::vector<T> grid) {
  if (grid.size() < 2) throw std::invalid_argument("a sweep needs at least 2 grid points");
  SweepResult<T> out;
  out.awards.reserve(grid.size());
  for (const T& gamma : grid) {
    const Allocation<T> x = geometric(p, GammaParam<T>(gamma));
    out.awards.emplace_back(x.awards().begin(), x.awards().end());
  }
  out.grid = std::move(grid);
  return out;
}

/// For each agent, the γ maximising its geometric award: a grid scan, then
/// golden-section refinement around the best grid point. Ties go to the
/// smaller γ.
std::vector<double> argmax_gamma_per_agent(const Problem<double>& p, double tolerance = 1e-6,
                                           std::size_t grid_points = 1001);

template <Quantity T>
struct FamilyComparison {
  std::vector<T> params;
  std::vector<T> claims;
  /// geometric[k][i] = φ^{params[k]}_i, averaging likewise.
  std::vector<std::vector<T>> geometric;
  std::vector<std::vector<T>> averaging;
};

template <Quantity T>
FamilyComparison<T> compare_families(const Problem<T>& p, const std::vector<T>& params) {
  FamilyComparison<T> out;
  out.params = params;
  out.claims.assign(p.claims().begin(), p.claims().end());
  for (const T& v : params) {
    const Allocation<T> g = geometric(p, GammaParam<T>(v));
    const Allocation<T> a = averaging(p, LambdaParam<T>(v));
    out.geometric.emplace_back(g.awards().begin(), g.awards().end());
    out.averaging.emplace_back(a.awards().begin(), a.awards().end());
  }
  return out;
}

/// Side-by-side table in the layout of the reference case-study tables:
/// one row per agent, geometric columns then averaging columns, half-up
/// rounded to two decimals, with a Total row.
std::string render_family_table(const FamilyComparison<double>& table, const std::vector<std::string>& agent_names);

}  // namespace riparian
