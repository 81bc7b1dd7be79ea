#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte position of the first bad byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// An operation that needs a connected graph got a disconnected one.
class DisconnectedError : public Error {
 public:
  DisconnectedError() : Error("graph is not connected") {}
};

/// Input outside the supported size range (graph6 order, factorial budgets, ...).
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace tmc
