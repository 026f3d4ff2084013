#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontomap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An axiom or entity-set element broke a shape rule.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A ground, profile or element has the wrong entity kind for the request.
class KindError : public Error {
 public:
  using Error::Error;
};

class NoSnapshotError : public Error {
 public:
  NoSnapshotError() : Error("no reasoner snapshot: call synchronise_reasoner first") {}
};

/// Undo was asked to replay intents over a locus that has moved on.
class SequenceConflict : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace ontomap
