#include "goncurve/error.hpp"

namespace goncurve {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::zero_point: return "ZeroPoint";
    case ErrorCode::degenerate_input: return "DegenerateInput";
    case ErrorCode::base_point: return "BasePoint";
    case ErrorCode::degenerate_pencil: return "DegeneratePencil";
    case ErrorCode::exhausted_retries: return "ExhaustedRetries";
    case ErrorCode::singular_system: return "SingularSystem";
    case ErrorCode::bad_shape: return "BadShape";
    case ErrorCode::rank_mismatch: return "RankMismatch";
    case ErrorCode::invalid_curve: return "InvalidCurve";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::solver_budget_exceeded: return "SolverBudgetExceeded";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::bad_genus: return "BadGenus";
  }
  return "Unknown";
}

}  // namespace goncurve
