#include "matchlab/error.hpp"

namespace matchlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::NotASubMatching: return "NotASubMatching";
    case ErrorCode::NotAPerfectMatching: return "NotAPerfectMatching";
    case ErrorCode::InfeasibleDegreeSequence: return "InfeasibleDegreeSequence";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnbalancedBipartition: return "UnbalancedBipartition";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::EmptyStratum: return "EmptyStratum";
    case ErrorCode::SinkVertex: return "SinkVertex";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GenerationTimeout: return "GenerationTimeout";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooLargeForExactSweep: return "TooLargeForExactSweep";
    case ErrorCode::TooManyMatchings: return "TooManyMatchings";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ExactInfeasible: return "ExactInfeasible";
  }
  return "Unknown";
}

}  // namespace matchlab
