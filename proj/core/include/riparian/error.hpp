#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riparian {

enum class ErrorCode {
  EmptyClaims,
  NegativeClaim,
  ZeroAggregateClaim,
  NegativeBudget,
  BudgetExceedsAggregate,
  ParameterOutOfRange,
  GammaOutOfRange,
  InvalidGammaFunction,
  CycleDetected,
  NoMouth,
  UnknownNode,
  DuplicateNode,
  DuplicateEdge,
  UnequalEdgeWeights,
};

std::string_view error_code_name(ErrorCode code);

/// Raised whenever an input violates a domain invariant. `index` is the
/// 0-based agent position when the failure is tied to one agent; `nodes`
/// carries node identifiers for basin errors (e.g. the cycle found).
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ErrorCode code, std::string message, std::optional<std::size_t> index = std::nullopt,
                  std::vector<std::string> nodes = {});

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::size_t>& index() const noexcept { return index_; }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::vector<std::string> nodes_;
};

}  // namespace riparian
