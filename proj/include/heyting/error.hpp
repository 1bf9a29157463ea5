#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heyting {

enum class ErrorKind {
  NotAPoset,
  NotALattice,
  NotDistributive,
  NoImplication,
  Degenerate,
  BudgetExceeded,
  SyntaxError,
  UnboundVariable,
  MultiVariable,
  ClassificationBudgetExceeded,
  NoSubstitutionFound,
  NotFoundWithinBudget,
  GapEquation,
  NotCentral,
  TrivialCenterElement,
  NotMaximalNonCentral,
  NotATopology,
  EllTooSmall,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NoImplication: return "NoImplication";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::MultiVariable: return "MultiVariable";
    case ErrorKind::ClassificationBudgetExceeded: return "ClassificationBudgetExceeded";
    case ErrorKind::NoSubstitutionFound: return "NoSubstitutionFound";
    case ErrorKind::NotFoundWithinBudget: return "NotFoundWithinBudget";
    case ErrorKind::GapEquation: return "GapEquation";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::TrivialCenterElement: return "TrivialCenterElement";
    case ErrorKind::NotMaximalNonCentral: return "NotMaximalNonCentral";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::EllTooSmall: return "EllTooSmall";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an `Error` carrying a kind,
/// so callers (the CLI in particular) can map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures also remember the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace heyting
