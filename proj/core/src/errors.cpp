#include "cpe/errors.hpp"

namespace cpe {

const char* to_string(FaultKind kind) {
  switch (kind) {
    case FaultKind::Numerical: return "NumericalFault";
    case FaultKind::Usage: return "UsageFault";
    case FaultKind::SigmaPositivityLost: return "SigmaPositivityLost";
    case FaultKind::PressurePositivityLost: return "PressurePositivityLost";
    case FaultKind::Stability: return "StabilityFault";
    case FaultKind::Symmetry: return "SymmetryFault";
    case FaultKind::NoContraction: return "NoContraction";
    case FaultKind::Parse: return "ParseFault";
    case FaultKind::Constraint: return "ConstraintFault";
    case FaultKind::Format: return "FormatFault";
    case FaultKind::Io: return "IoFault";
  }
  return "Fault";
}

Fault::Fault(FaultKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

ParseFault::ParseFault(std::string key, const std::string& reason)
    : Fault(FaultKind::Parse, key + ": " + reason), key_(std::move(key)) {}

ConstraintFault::ConstraintFault(std::string key, const std::string& reason)
    : Fault(FaultKind::Constraint, key + ": " + reason), key_(std::move(key)) {}

FormatFault::FormatFault(const std::string& reason, std::uint64_t offset)
    : Fault(FaultKind::Format, reason + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

int exit_code(FaultKind kind) noexcept {
  switch (kind) {
    case FaultKind::NoContraction:
    case FaultKind::Stability:
      return 3;
    default:
      return 2;
  }
}

}  // namespace cpe
