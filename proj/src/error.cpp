#include "esr/error.hpp"

namespace esr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonphysicalState: return "NonphysicalState";
    case ErrorCode::kSingularHessian: return "SingularHessian";
    case ErrorCode::kDegenerateWaveSpeeds: return "DegenerateWaveSpeeds";
    case ErrorCode::kOmegaOutOfRange: return "InvalidOmega";
    case ErrorCode::kB1Discontinuity: return "B1Discontinuity";
    case ErrorCode::kZeroWaveSpeed: return "ZeroWaveSpeed";
    case ErrorCode::kGridMismatch: return "GridMismatch";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kEntropyViolation: return "EntropyViolation";
    case ErrorCode::kUsage: return "UsageError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace esr
