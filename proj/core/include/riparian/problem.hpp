#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riparian/error.hpp"
#include "riparian/numeric.hpp"

namespace riparian {

namespace detail {
void note_allocation_audited() noexcept;
}  // namespace detail

/// Number of allocations whose balance and non-negativity have been verified
/// in this process. Every rule result passes through that check.
std::uint64_t allocations_audited() noexcept;

/// A pollution abatement problem: claims ordered upstream to downstream and
/// a budget no larger than their sum. Only constructible through
/// validate_problem, so a Problem in hand always satisfies its invariants.
template <Quantity T>
class Problem {
 public:
  std::span<const T> claims() const noexcept { return claims_; }
  const T& claim(std::size_t i) const { return claims_.at(i); }
  const T& budget() const noexcept { return budget_; }
  const T& aggregate() const noexcept { return aggregate_; }
  std::size_t size() const noexcept { return claims_.size(); }

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  template <Quantity U>
  friend Problem<U> validate_problem(std::vector<U> claims, U budget);

  Problem(std::vector<T> claims, T budget, T aggregate)
      : claims_(std::move(claims)), budget_(std::move(budget)), aggregate_(std::move(aggregate)) {}

  std::vector<T> claims_;
  T budget_;
  T aggregate_;
};

template <Quantity T>
Problem<T> validate_problem(std::vector<T> claims, T budget) {
  using Traits = NumericTraits<T>;
  if (claims.empty()) throw ValidationError(ErrorCode::EmptyClaims, "at least one agent is required");
  T aggregate{0};
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (claims[i] < T{0}) {
      throw ValidationError(ErrorCode::NegativeClaim,
                            "claim of agent " + std::to_string(i + 1) + " is " + Traits::to_string(claims[i]), i);
    }
    aggregate = aggregate + claims[i];
  }
  if (!(T{0} < aggregate)) throw ValidationError(ErrorCode::ZeroAggregateClaim, "aggregate claim must be positive");
  if (budget < T{0}) throw ValidationError(ErrorCode::NegativeBudget, "budget is " + Traits::to_string(budget));
  if (!Traits::less_or_equal(budget, aggregate)) {
    throw ValidationError(ErrorCode::BudgetExceedsAggregate,
                          "budget " + Traits::to_string(budget) + " exceeds aggregate claim " +
                              Traits::to_string(aggregate));
  }
  return Problem<T>(std::move(claims), std::move(budget), std::move(aggregate));
}

/// E = C, exactly for rationals and within 1e-9 for doubles.
template <Quantity T>
bool is_redistribution(const Problem<T>& p) {
  return NumericTraits<T>::equal(p.budget(), p.aggregate());
}

template <Quantity T>
class Allocation {
 public:
  /// Wraps awards computed for `p`, verifying Σ awards = E and awards ≥ 0.
  /// An unbalanced result is a bug in the rule, so this throws logic_error.
  static Allocation checked(const Problem<T>& p, std::vector<T> awards) {
    if (awards.size() != p.size()) throw std::logic_error("allocation size differs from population");
    T total{0};
    for (const T& a : awards) {
      if (a < T{0}) throw std::logic_error("negative award " + NumericTraits<T>::to_string(a));
      total = total + a;
    }
    bool balanced = false;
    if constexpr (NumericTraits<T>::exact) {
      balanced = total == p.budget();
    } else {
      balanced = std::fabs(total - p.budget()) <= 1e-9 * std::max(1.0, std::fabs(p.budget()));
    }
    if (!balanced) {
      throw std::logic_error("allocation sums to " + NumericTraits<T>::to_string(total) + " instead of budget " +
                             NumericTraits<T>::to_string(p.budget()));
    }
    detail::note_allocation_audited();
    return Allocation(std::move(awards));
  }

  std::span<const T> awards() const noexcept { return awards_; }
  const T& operator[](std::size_t i) const { return awards_.at(i); }
  std::size_t size() const noexcept { return awards_.size(); }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  explicit Allocation(std::vector<T> awards) : awards_(std::move(awards)) {}
  std::vector<T> awards_;
};

template <Quantity T>
std::vector<double> to_doubles(std::span<const T> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const T& v : values) out.push_back(to_double(v));
  return out;
}

}  // namespace riparian
