#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace b1grid {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map them to exit codes in one place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is structurally fine but violates a precondition of the requested
// operation (wrong mode, not one-string, not dominating, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class GeneralPositionViolation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class WrongMode : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnknownId : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DuplicateId : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TooFewPaths : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotOneString : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotDominating : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotHitting : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DegreeTooHigh : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class TooLarge : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class Infeasible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Randomized net finder exhausted its resample budget.
class NetFailure : public Error {
 public:
  using Error::Error;
};

// The gadget generator produced a representation whose graph does not match
// the gadget graph. Indicates a bug; never expected on valid input.
class LayoutFailure : public Error {
 public:
  using Error::Error;
};

class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace b1grid
