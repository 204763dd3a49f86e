#include "origami/error.hpp"

namespace origami {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedCycles: return "MalformedCycles";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::RequiresTransitive: return "RequiresTransitive";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::DegenerateSurface: return "DegenerateSurface";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotInVeechGroup: return "NotInVeechGroup";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::FormViolation: return "FormViolation";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace origami
