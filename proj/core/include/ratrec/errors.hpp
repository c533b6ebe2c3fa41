#pragma once

#include <stdexcept>
#include <string>

namespace ratrec {

// Bad user input: malformed expressions or files, violated operation
// preconditions reachable from the command line. CLI exit code 1.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A method gave up within its configured budget (degree caps, retries,
// truncation cap). CLI exit code 2.
class MethodFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NoFitWithinCaps : public MethodFailure {
public:
  using MethodFailure::MethodFailure;
};

class VerificationFailed : public MethodFailure {
public:
  using MethodFailure::MethodFailure;
};

class RetryBudgetExhausted : public MethodFailure {
public:
  using MethodFailure::MethodFailure;
};

class NotSquarefreeAfterShear : public MethodFailure {
public:
  using MethodFailure::MethodFailure;
};

class DegreeBoundsTooSmall : public MethodFailure {
public:
  using MethodFailure::MethodFailure;
};

class OriginNotOnZeroSet : public InputError {
public:
  using InputError::InputError;
};

class ZeroRemainder : public InputError {
public:
  using InputError::InputError;
};

class PlaneInsideZeroSet : public InputError {
public:
  using InputError::InputError;
};

class DivisionByZeroWithoutDefault : public InputError {
public:
  using InputError::InputError;
};

class PointNotCovered : public InputError {
public:
  using InputError::InputError;
};

// Expression parse failure with source position (1-based).
class ExprParseError : public InputError {
public:
  ExprParseError(const std::string& what, int line, int column)
      : InputError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace ratrec
