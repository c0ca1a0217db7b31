#ifndef CSIS_ERRORS_HPP
#define CSIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csis {

/// Base class for all recoverable CSIS errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input bytes (PNM, key file, container).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent parameters (block size, p1/|m| bounds, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Payload does not fit into the available permissible measurements.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Extracted stream cannot be parsed as a framed ciphertext
/// (wrong key or corrupted stego-data).
class FramingError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values encountered inside a numeric routine.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Process exit codes used by the CLI, one per error family.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitFormatError = 2,
  kExitConfigError = 3,
  kExitCapacityError = 4,
  kExitFramingError = 5,
  kExitNumericError = 6,
};

}  // namespace csis

#endif  // CSIS_ERRORS_HPP
