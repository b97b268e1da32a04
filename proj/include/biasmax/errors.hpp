#pragma once

#include <stdexcept>
#include <string>

namespace biasmax {

// Bad values, malformed files, or inconsistent configuration. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing or contradictory configuration entries. CLI exit code 2.
class ConfigError : public InputError {
 public:
  explicit ConfigError(const std::string& msg) : InputError(msg) {}
};

// Instance too large or a precondition violated. CLI exit code 3.
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace biasmax
