#pragma once

#include <stdexcept>
#include <string>

namespace densify {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Breakpoints or exponents that do not form a valid piecewise power law.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

// Path gain evaluated at d <= 0.
class DomainError : public Error {
 public:
  using Error::Error;
};

// SNR-at-corner noise requested for a model without a breakpoint.
class MissingCornerDistance : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// Configuration errors carry the offending field path, e.g. "scenario.thresholds_linear".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace densify
