#pragma once

#include <stdexcept>
#include <string>

namespace hpe {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A field carries a parity tag incompatible with the requested operation.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Two fields that must share a grid do not.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// Odd extension requested for data that does not vanish at z = 0 or z = -h.
class OddExtensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The horizontal Poisson problem was given a source with nonzero mean.
class NonZeroMeanError : public Error {
 public:
  using Error::Error;
};

/// A vertical antiderivative was requested for data with nonzero vertical mean.
class NonZeroVerticalMeanError : public Error {
 public:
  using Error::Error;
};

/// The CFL-limited step fell below the configured abort threshold.
class StepTooSmall : public Error {
 public:
  StepTooSmall(const std::string& msg, double time) : Error(msg), t(time) {}
  double t;
};

/// A state update produced a NaN or infinity.
class NonFinite : public Error {
 public:
  NonFinite(const std::string& msg, double time) : Error(msg), t(time) {}
  double t;
};

/// Config text could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line_number)
      : Error(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
  int line;
};

/// Config parsed but a field value is out of range.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& field_name, const std::string& msg)
      : Error("invalid value for '" + field_name + "': " + msg), field(field_name) {}
  std::string field;
};

/// A snapshot header is inconsistent with its payload.
class HeaderMismatch : public Error {
 public:
  using Error::Error;
};

/// An inequality check hit a zero right-hand side with a nonzero left-hand
/// side, which cannot happen analytically.
class DegenerateRHS : public Error {
 public:
  using Error::Error;
};

}  // namespace hpe
