#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmap {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A tunable or argument outside its admissible range.
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// The oracle does not provide an operation the caller needs.
class CapabilityError : public Error {
  public:
    using Error::Error;
};

/// NaN or Inf encountered in a value, gradient or operator product.
class NumericError : public Error {
  public:
    using Error::Error;
};

/// Input data violates a model requirement (e.g. labels outside {-1, +1}).
class DataError : public Error {
  public:
    using Error::Error;
};

class LinesearchError : public Error {
  public:
    using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
  public:
    using Error::Error;
};

class InsufficientDataError : public Error {
  public:
    using Error::Error;
};

/// Malformed text input. `line()` is 1-based; 0 means "not line specific".
class ParseError : public Error {
  public:
    ParseError(const std::string &msg, std::size_t line)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
          line_{line} {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace tmap
