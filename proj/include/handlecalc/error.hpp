#pragma once

#include <stdexcept>
#include <string>

namespace handlecalc {

/// Base class for user-facing failures (bad input, illegal moves).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidMove : public Error {
 public:
  using Error::Error;
};

class UnknownHandle : public Error {
 public:
  explicit UnknownHandle(const std::string& id) : Error("unknown handle '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A lattice model or class set violates a precondition of an SW operation.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace handlecalc
