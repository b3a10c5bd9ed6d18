#include "riparian/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace riparian {

namespace {

Allocation<double> evaluate_family(const Problem<double>& p, Family family, double parameter) {
  if (family == Family::Geometric) return geometric(p, GammaParam<double>(parameter));
  return averaging(p, LambdaParam<double>(parameter));
}

bool feasible(const Problem<double>& p, Family family, double parameter) {
  return claims_bounded(p, evaluate_family(p, family, parameter)).bounded;
}

std::string format_parameter(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

}  // namespace

std::string family_name(Family family) { return family == Family::Geometric ? "geometric" : "averaging"; }

ThresholdResult search_min_parameter(const Problem<double>& p, Family family, ThresholdSearchOptions options) {
  if (!(options.grid_step > 0) || options.grid_step > 1) throw std::invalid_argument("grid step must lie in (0, 1]");
  if (!(options.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");

  const auto steps = static_cast<std::size_t>(std::llround(1.0 / options.grid_step));
  std::vector<double> grid(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) grid[k] = static_cast<double>(k) / static_cast<double>(steps);

  std::vector<bool> ok(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) ok[k] = feasible(p, family, grid[k]);

  ThresholdResult result;
  result.family = family;
  result.tolerance = options.tolerance;
  result.method = "grid scan (step " + format_parameter(options.grid_step) + ") + bisection";

  std::optional<std::size_t> run_start;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (ok[k] && !run_start) run_start = k;
    if (!ok[k] && run_start) {
      result.feasible_intervals.push_back({grid[*run_start], grid[k - 1]});
      run_start.reset();
    }
  }
  if (run_start) result.feasible_intervals.push_back({grid[*run_start], grid.back()});

  if (result.feasible_intervals.empty()) {
    // Parameter 1 is the proportional rule, which never exceeds claims; this
    // only happens if a claim-bounded point is lost to rounding.
    throw std::logic_error("no claims-bounded parameter found on the grid");
  }
  result.single_interval = result.feasible_intervals.size() == 1;
  if (!result.single_interval) {
    result.warnings.push_back("feasible set has " + std::to_string(result.feasible_intervals.size()) +
                              " disjoint runs on the grid; threshold is the lower end of the lowest one");
  }

  const double first = result.feasible_intervals.front().lo;
  if (first == 0.0) {
    result.value = 0.0;
    return result;
  }
  const auto first_index = static_cast<std::size_t>(std::llround(first * static_cast<double>(steps)));
  double lo = grid[first_index - 1];
  double hi = grid[first_index];
  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(p, family, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.value = hi;
  result.binding_agent = claims_bounded(p, evaluate_family(p, family, lo)).worst_agent;
  return result;
}

ThresholdResult min_gamma_claims_bounded(const Problem<double>& p, double tolerance) {
  return search_min_parameter(p, Family::Geometric, {1e-3, tolerance});
}

ThresholdResult min_lambda_claims_bounded(const Problem<double>& p) {
  const double budget = p.budget();
  const double mouth_claim = p.claims().back();
  ThresholdResult result;
  result.family = Family::Averaging;
  result.tolerance = 0;
  if (budget <= mouth_claim) {
    result.value = 0;
    result.method = "closed form: E <= c_n, full transfer is already claims-bounded";
  } else {
    const double proportional_mouth = budget / p.aggregate() * mouth_claim;
    result.value = (budget - mouth_claim) / (budget - proportional_mouth);
    result.binding_agent = p.size() - 1;
    result.method = "closed form: mouth constraint (E - c_n) / (E - (E/C) c_n)";
  }
  result.feasible_intervals.push_back({result.value, 1.0});
  return result;
}

std::vector<double> argmax_gamma_per_agent(const Problem<double>& p, double tolerance, std::size_t grid_points) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const std::vector<double> grid = uniform_grid<double>(grid_points);
  const SweepResult<double> sweep = sweep_gamma(p, grid);

  std::vector<double> best_gamma(p.size());
  for (std::size_t agent = 0; agent < p.size(); ++agent) {
    auto award = [&](double gamma) { return geometric(p, GammaParam<double>(gamma))[agent]; };

    std::size_t best = 0;
    for (std::size_t k = 1; k < grid.size(); ++k) {
      if (sweep.awards[k][agent] > sweep.awards[best][agent]) best = k;
    }
    double best_value = sweep.awards[best][agent];
    double best_at = grid[best];

    // Golden-section search on the bracket around the best grid point.
    double a = grid[best == 0 ? 0 : best - 1];
    double b = grid[std::min(best + 1, grid.size() - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = award(x1);
    double f2 = award(x2);
    while (b - a > tolerance) {
      if (f1 >= f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = award(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = award(x2);
      }
    }
    const double refined_at = 0.5 * (a + b);
    const double refined_value = award(refined_at);
    // Require a real improvement so flat stretches keep the smaller grid γ.
    if (refined_value > best_value + 1e-12 * std::max(1.0, std::fabs(best_value))) {
      best_value = refined_value;
      best_at = refined_at;
    }
    best_gamma[agent] = best_at;
  }
  return best_gamma;
}

std::string render_family_table(const FamilyComparison<double>& table, const std::vector<std::string>& agent_names) {
  const std::size_t n = table.claims.size();
  if (agent_names.size() != n) throw std::invalid_argument("one name per agent required");
  std::size_t name_width = 5;
  for (const auto& name : agent_names) name_width = std::max(name_width, name.size());

  std::ostringstream os;
  auto cell = [&](const std::string& s) { os << ' ' << std::setw(8) << s; };
  os << std::left << std::setw(static_cast<int>(name_width)) << "Agent" << std::right;
  cell("c_i");
  for (double v : table.params) cell("g=" + format_parameter(v));
  for (double v : table.params) cell("l=" + format_parameter(v));
  os << '\n';

  std::vector<double> geo_totals(table.params.size(), 0.0);
  std::vector<double> avg_totals(table.params.size(), 0.0);
  double claim_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    os << std::left << std::setw(static_cast<int>(name_width)) << agent_names[i] << std::right;
    cell(format_fixed(table.claims[i], 2));
    claim_total += table.claims[i];
    for (std::size_t k = 0; k < table.params.size(); ++k) {
      cell(format_fixed(table.geometric[k][i], 2));
      geo_totals[k] += table.geometric[k][i];
    }
    for (std::size_t k = 0; k < table.params.size(); ++k) {
      cell(format_fixed(table.averaging[k][i], 2));
      avg_totals[k] += table.averaging[k][i];
    }
    os << '\n';
  }
  os << std::left << std::setw(static_cast<int>(name_width)) << "Total" << std::right;
  cell(format_fixed(claim_total, 2));
  for (double t : geo_totals) cell(format_fixed(t, 2));
  for (double t : avg_totals) cell(format_fixed(t, 2));
  os << '\n';
  return os.str();
}

}  // namespace riparian
