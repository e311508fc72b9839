#pragma once

#include <stdexcept>
#include <string>

namespace apimex {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. rho <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Unknown name in a registry (tableaux, problems).
class LookupError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Numerical failure during a solve or a time step.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// File system failure while writing results.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace apimex
