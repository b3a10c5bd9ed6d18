#include "riparian/error.hpp"

namespace riparian {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyClaims: return "EmptyClaims";
    case ErrorCode::NegativeClaim: return "NegativeClaim";
    case ErrorCode::ZeroAggregateClaim: return "ZeroAggregateClaim";
    case ErrorCode::NegativeBudget: return "NegativeBudget";
    case ErrorCode::BudgetExceedsAggregate: return "BudgetExceedsAggregate";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::InvalidGammaFunction: return "InvalidGammaFunction";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NoMouth: return "NoMouth";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnequalEdgeWeights: return "UnequalEdgeWeights";
  }
  return "Unknown";
}

ValidationError::ValidationError(ErrorCode code, std::string message, std::optional<std::size_t> index,
                                 std::vector<std::string> nodes)
    : std::invalid_argument(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      index_(index),
      nodes_(std::move(nodes)) {}

}  // namespace riparian
