#pragma once

#include <stdexcept>
#include <string>

namespace tecno {

/// Raised when a computation produces a non-finite value or breaks a
/// structural guarantee of the scheme (e.g. negative entropy dissipation).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for malformed or inconsistent configuration input.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tecno
