#include "steklov/error.hpp"

namespace steklov {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonPositiveMeasure: return "NonPositiveMeasure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EdgeNotFound: return "EdgeNotFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NoBoundary: return "NoBoundary";
    case ErrorCode::SingularInterior: return "SingularInterior";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotUnitWeight: return "NotUnitWeight";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::OutOfSupportedRange: return "OutOfSupportedRange";
    case ErrorCode::NotASubgraph: return "NotASubgraph";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
  }
  return "Unknown";
}

}  // namespace steklov
