#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace augsparse {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the operation's domain (index out of range,
// conflicting seeds, non-original node in a cut set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A splitting-function description is malformed (bad family parameter,
// custom list of the wrong length).
class SpecError : public Error {
 public:
  using Error::Error;
};

// A penalty sequence violates the SCB / GSCB constraints at `index()`.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// A piecewise-linear cover does not have the shape a gadget conversion needs.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line()` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exhaustive oracle was asked to handle an input larger than it supports.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace augsparse
