#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user-supplied data: bad edge lists, unparsable graph6, ...
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the mathematical domain of an operation (e.g. r = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a hard size guard (oracle, canonicalization, enumeration).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an API contract (e.g. weights not computed from this graph).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// graph6 parse failure; `offset` is the byte position of the offending
/// character within the input line.
class Graph6ParseError : public InputError {
 public:
  Graph6ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace turan
