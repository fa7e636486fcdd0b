#include "frcheck/error.hpp"

namespace frcheck {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::SimpleFormatOnMultigraph: return "SimpleFormatOnMultigraph";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::MixedGraphs: return "MixedGraphs";
    case ErrorCode::InvalidFrequencySpec: return "InvalidFrequencySpec";
    case ErrorCode::InvalidCut: return "InvalidCut";
    case ErrorCode::FrequencyMismatch: return "FrequencyMismatch";
    case ErrorCode::MixedSplit: return "MixedSplit";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotBridgeless: return "NotBridgeless";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Timeout: return "Timeout";
  }
  return "Unknown";
}

}  // namespace frcheck
