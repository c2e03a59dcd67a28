/// @file error.h
/// Exception types thrown by the diagnosis library.
#ifndef MBD_ERROR_H_
#define MBD_ERROR_H_

#include <stdexcept>
#include <string>

namespace mbd {

/// Base for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument lies outside the domain of an operation,
/// e.g. a component id outside K or an unknown variable.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Invalid configuration or parameters.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Malformed input document.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// No discriminating probe exists for the current diagnoses.
class NoProbeError : public Error {
 public:
  explicit NoProbeError(const std::string& msg) : Error(msg) {}
};

/// A search invariant checked at runtime does not hold.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& msg)
      : std::logic_error(msg) {}
};

}  // namespace mbd

#endif  // MBD_ERROR_H_
