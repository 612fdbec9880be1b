#pragma once

#include <stdexcept>

namespace mgear {

// Invalid experiment definition: unknown key, out-of-range value, malformed
// config text, inconsistent campaign spec.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure while preparing or writing campaign outputs.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mgear
