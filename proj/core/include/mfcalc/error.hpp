#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request whose mathematical preconditions do not hold
/// (dimension mismatch, unrealizable classification data, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `offset()` is the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace mfcalc
