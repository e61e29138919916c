#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clt {

// Base for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Surface-syntax error with 1-based source location.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// JSON document violates a serialization schema; path is JSON-pointer style.
class SchemaError : public Error {
public:
  SchemaError(const std::string& what, const std::string& path)
      : Error(what + " at " + (path.empty() ? std::string("/") : path)), path_(path) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

// Precondition violations of the guided prover.
class NotBinaryError : public Error {
public:
  explicit NotBinaryError(const std::string& what) : Error(what) {}
};

class NotTautologicalError : public Error {
public:
  explicit NotTautologicalError(const std::string& what) : Error(what) {}
};

// Assignment does not cover an atom of the formula under evaluation.
class EvalError : public Error {
public:
  explicit EvalError(const std::string& what) : Error(what) {}
};

// A reachable-only-through-bugs state; never raised on valid inputs.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace clt
