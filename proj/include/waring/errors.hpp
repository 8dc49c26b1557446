#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace waring {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  BadReduction,
  ArityMismatch,
  DualMismatch,
  Singular,
  Inconsistent,
  NotSquarefree,
  ZeroPolynomial,
  ConvergenceFailure,
  ResourceBudgetExceeded,
  NotZeroDimensional,
  ShapeFailure,
  NonGenericCubic,
  DegenerateJ,
  SingularCatalecticant,
  NonGenericPencil,
  DegeneratePoint,
  SyntaxError,
  UnknownVariable,
  Usage,
};

inline std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DualMismatch: return "DualMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::ShapeFailure: return "ShapeFailure";
    case ErrorKind::NonGenericCubic: return "NonGenericCubic";
    case ErrorKind::DegenerateJ: return "DegenerateJ";
    case ErrorKind::SingularCatalecticant: return "SingularCatalecticant";
    case ErrorKind::NonGenericPencil: return "NonGenericPencil";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is the machine-readable tag
/// surfaced by the CLI as `error.kind`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace waring
