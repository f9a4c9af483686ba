#include "matcon/error.hpp"

namespace matcon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidResourceCount: return "InvalidResourceCount";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonPositiveProcessingTime: return "NonPositiveProcessingTime";
    case ErrorCode::NegativeQuantity: return "NegativeQuantity";
    case ErrorCode::NegativeSupplyDate: return "NegativeSupplyDate";
    case ErrorCode::ResourceIndexOutOfRange: return "ResourceIndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InsufficientTotalSupply: return "InsufficientTotalSupply";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::MissingJob: return "MissingJob";
    case ErrorCode::DuplicateJob: return "DuplicateJob";
    case ErrorCode::InvalidJobIndex: return "InvalidJobIndex";
    case ErrorCode::NegativeStart: return "NegativeStart";
    case ErrorCode::ScheduleHasIdle: return "ScheduleHasIdle";
    case ErrorCode::ScheduleInfeasible: return "ScheduleInfeasible";
    case ErrorCode::CountOverflow: return "CountOverflow";
    case ErrorCode::SolverIncomplete: return "SolverIncomplete";
    case ErrorCode::NotWeaklyOrdered: return "NotWeaklyOrdered";
    case ErrorCode::MultiResource: return "MultiResource";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::StateSpaceExceeded: return "StateSpaceExceeded";
    case ErrorCode::SizeSumMismatch: return "SizeSumMismatch";
    case ErrorCode::TooManyObjects: return "TooManyObjects";
    case ErrorCode::DegenerateBase: return "DegenerateBase";
    case ErrorCode::InvalidBase: return "InvalidBase";
  }
  return "Unknown";
}

bool is_cap_error(ErrorCode code) {
  return code == ErrorCode::CapExceeded || code == ErrorCode::StateSpaceExceeded;
}

}  // namespace matcon
