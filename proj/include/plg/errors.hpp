#pragma once

#include <stdexcept>
#include <string>

namespace plg {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A constructor rejected its input. `code()` names the violated invariant,
// e.g. "EndpointViolation" or "ContinuityViolation".
class ValidationError : public Error {
 public:
  ValidationError(std::string code, const std::string& what)
      : Error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IncompatibleRadicands : public Error {
 public:
  IncompatibleRadicands() : Error("surds with different radicands") {}
};

// Raised when a statement that must hold mathematically fails to verify.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// The derivative at a point is not a single matrix.
class NotLocallyAffine : public Error {
 public:
  using Error::Error;
};

// No admissible neighbourhood exists for a perturbation step.
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

}  // namespace plg
