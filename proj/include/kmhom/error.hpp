#pragma once

#include <stdexcept>
#include <string>

namespace kmhom {

enum class ErrorKind {
  NotGCM,
  NotSymmetrizable,
  DimensionMismatch,
  ZeroNorm,
  OutOfBudget,
  NotRealRoot,
  NotFiniteType,
  BudgetExceeded,
  NotComparable,
  NotInPSPlus,
  DegenerateDenominator,
  InvalidArgument,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotGCM: return "NotGCM";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroNorm: return "ZeroNorm";
    case ErrorKind::OutOfBudget: return "OutOfBudget";
    case ErrorKind::NotRealRoot: return "NotRealRoot";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotInPSPlus: return "NotInPSPlus";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool cond, ErrorKind kind, const std::string& message) {
  if (!cond) fail(kind, message);
}

}  // namespace kmhom
