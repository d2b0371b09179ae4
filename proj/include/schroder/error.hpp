#pragma once

#include <stdexcept>
#include <string>

namespace schroder {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text for a partition or path.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A well-formed object that lies outside an operation's domain,
/// e.g. mapping a partition that contains the pattern.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive generation asked for a size above the configured limit.
class LimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace schroder
