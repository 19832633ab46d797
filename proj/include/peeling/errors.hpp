#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace peeling {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a digraph description violates simplicity, acyclicity or the
/// out-degree bound on its valuation.
class InvalidDigraph : public Error {
public:
  using Error::Error;
};

class UnknownVertex : public Error {
public:
  using Error::Error;
};

class NotErasable : public Error {
public:
  using Error::Error;
};

class NotInitialSection : public Error {
public:
  using Error::Error;
};

/// An enumeration hit its configured element cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

class JoinUnavailable : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace peeling
