#pragma once

#include <stdexcept>
#include <string>

namespace findim {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidPresentation : public Error {
public:
  using Error::Error;
};

class InfiniteDimensional : public Error {
public:
  using Error::Error;
};

class InvalidExponentMatrix : public Error {
public:
  using Error::Error;
};

class InvalidBasedAlgebra : public Error {
public:
  using Error::Error;
};

class NotABasisPath : public Error {
public:
  using Error::Error;
};

class NonParallelElement : public Error {
public:
  using Error::Error;
};

class InvalidModule : public Error {
public:
  using Error::Error;
};

class DimensionBoundExceeded : public Error {
public:
  DimensionBoundExceeded(std::size_t dimension, std::size_t bound)
      : Error("module dimension " + std::to_string(dimension) + " exceeds the oracle bound " +
              std::to_string(bound)),
        dimension_(dimension), bound_(bound) {}

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t bound() const noexcept { return bound_; }

private:
  std::size_t dimension_;
  std::size_t bound_;
};

class InputError : public Error {
public:
  using Error::Error;
};

/// Parse failures carry the 1-based line and column of the first offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& kind, int line, int column, const std::string& reason)
      : Error(kind + " at " + std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
        line_(line), column_(column), reason_(reason) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  int line_;
  int column_;
  std::string reason_;
};

class SyntaxError : public ParseError {
public:
  SyntaxError(int line, int column, const std::string& reason)
      : ParseError("syntax error", line, column, reason) {}
};

class ResolutionError : public ParseError {
public:
  ResolutionError(int line, int column, const std::string& reason)
      : ParseError("resolution error", line, column, reason) {}
};

class TypeError : public ParseError {
public:
  TypeError(int line, int column, const std::string& reason)
      : ParseError("type error", line, column, reason) {}
};

} // namespace findim
