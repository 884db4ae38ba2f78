#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twotree {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by text decoders; offset is the byte (graph6) or line (rot) where
// decoding failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"), detail_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

// A claimed mathematical guarantee failed at runtime (a bug, or a
// counterexample to a theorem the algorithm relies on).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace twotree
