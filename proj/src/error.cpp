#include "qsl/error.hpp"

namespace qsl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ModulusExceedsOne: return "ModulusExceedsOne";
    case ErrorCode::NegativeAmplitude: return "NegativeAmplitude";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateLength: return "DegenerateLength";
    case ErrorCode::EmptyEvidence: return "EmptyEvidence";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qsl
