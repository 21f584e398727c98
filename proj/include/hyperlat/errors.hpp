#pragma once

#include <stdexcept>
#include <string>

namespace hyperlat {

enum class ErrorCode {
  NonPlanarRotation,  // rotation system has genus != 0
  Disconnected,       // map (or required subobject) is not connected
  EmptySelection,     // operation needs a nonempty vertex set
  TooCloseToRim,      // cluster reaches layers where the patch is not faithful
  NotAnInterface,     // input set fails the interface axioms
  NotTriangulable,    // no triangulation compatible with the constraints
  RegimeMismatch,     // check requested for a degree/face-degree outside its regime
  DomainError,        // malformed input (bad ids, asymmetric adjacency, ...)
  BudgetExceeded,     // work or size budget exhausted before an answer
  UsageError,         // bad CLI invocation
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::TooCloseToRim: return "TooCloseToRim";
    case ErrorCode::NotAnInterface: return "NotAnInterface";
    case ErrorCode::NotTriangulable: return "NotTriangulable";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace hyperlat
