#pragma once

#include <stdexcept>
#include <string>

namespace ringforge {

enum class Err {
  InvalidSpec,
  AxiomViolation,
  TrivialRing,
  RingMismatch,
  ContextMismatch,
  NotEnumerable,
  MissingEndo,
  NotAnEndomorphism,
  RuleMismatch,
  NonCommutativeBase,
  BoundTooLarge,
  ZeroPolynomial,
  UnknownSuite,
  ZeroG,
  MembershipFailed,
  StabilityFailed,
  SearchExhausted,
  NoProgress,
  ParseError,
};

const char* err_name(Err e);

class RfError : public std::runtime_error {
 public:
  RfError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

// CLI exit-code convention: 2 = invalid config, 3 = bound/ceiling exhausted,
// 4 = internal invariant breach.
int exit_code_for(Err e);

}  // namespace ringforge
