#include "mathplay/error.hpp"

namespace mathplay {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateRule: return "DuplicateRule";
    case ErrorCode::MissingAxiom: return "MissingAxiom";
    case ErrorCode::OutputTooLarge: return "OutputTooLarge";
    case ErrorCode::UnbalancedPop: return "UnbalancedPop";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::InvalidGivens: return "InvalidGivens";
    case ErrorCode::EstimateUndefined: return "EstimateUndefined";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace mathplay
