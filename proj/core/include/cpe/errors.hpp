#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpe {

enum class FaultKind {
  Numerical,
  Usage,
  SigmaPositivityLost,
  PressurePositivityLost,
  Stability,
  Symmetry,
  NoContraction,
  Parse,
  Constraint,
  Format,
  Io,
};

const char* to_string(FaultKind kind);

/// Base of every error raised by the library. The kind drives CLI exit codes.
class Fault : public std::runtime_error {
 public:
  Fault(FaultKind kind, const std::string& what);
  FaultKind kind() const noexcept { return kind_; }

 private:
  FaultKind kind_;
};

/// Non-finite values found in a field.
struct NumericalFault : Fault {
  explicit NumericalFault(const std::string& what) : Fault(FaultKind::Numerical, what) {}
};

/// Caller violated an operation's contract (shape mismatch, bad exponent, ...).
struct UsageFault : Fault {
  explicit UsageFault(const std::string& what) : Fault(FaultKind::Usage, what) {}
};

struct SigmaPositivityLost : Fault {
  explicit SigmaPositivityLost(const std::string& what)
      : Fault(FaultKind::SigmaPositivityLost, what) {}
};

struct PressurePositivityLost : Fault {
  explicit PressurePositivityLost(const std::string& what)
      : Fault(FaultKind::PressurePositivityLost, what) {}
};

struct StabilityFault : Fault {
  explicit StabilityFault(const std::string& what) : Fault(FaultKind::Stability, what) {}
};

/// Even symmetry of an extended field was broken beyond round-off.
struct SymmetryFault : Fault {
  explicit SymmetryFault(const std::string& what) : Fault(FaultKind::Symmetry, what) {}
};

struct NoContraction : Fault {
  explicit NoContraction(const std::string& what) : Fault(FaultKind::NoContraction, what) {}
};

/// Malformed configuration entry. `key()` names the offending entry.
class ParseFault : public Fault {
 public:
  ParseFault(std::string key, const std::string& reason);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Configuration value violates a physical or numerical constraint.
class ConstraintFault : public Fault {
 public:
  ConstraintFault(std::string key, const std::string& reason);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Snapshot bytes do not match the expected layout.
class FormatFault : public Fault {
 public:
  FormatFault(const std::string& reason, std::uint64_t offset);
  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

struct IoFault : Fault {
  explicit IoFault(const std::string& what) : Fault(FaultKind::Io, what) {}
};

/// Process exit code for a fault: 3 for NoContraction/Stability, 2 otherwise.
int exit_code(FaultKind kind) noexcept;

}  // namespace cpe
