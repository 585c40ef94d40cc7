#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lubkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The closure of an order relation identified two distinct elements.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// A size limit (configured or hard) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A claimed natural lub differs from the actual lub of the set.
class LubMismatch : public Error {
 public:
  using Error::Error;
};

class NotDirected : public Error {
 public:
  using Error::Error;
};

class EmptySetWithoutBottom : public Error {
 public:
  using Error::Error;
};

class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class NotInCarrier : public Error {
 public:
  using Error::Error;
};

class NotDirectedPoset : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NotMonotone : public Error {
 public:
  using Error::Error;
};

class NotContinuous : public Error {
 public:
  NotContinuous(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Two independent computations of the same quantity disagreed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lubkit
