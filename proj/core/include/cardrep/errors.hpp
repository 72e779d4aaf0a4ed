#pragma once

#include <stdexcept>
#include <string>

namespace cardrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: malformed values, size mismatches, out-of-range parameters.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A text file or command-line value could not be parsed.
class ParseError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// The request exceeds a configured size limit (e.g. exact work over n!).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violated an identity that must hold for valid data.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cardrep
