#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace declab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Composing ordinal maps whose codomain and domain disagree.
class CompositionError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A presentation (cells, faces, maps) violates the simplicial identities or
// references something that does not exist.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An enumeration exceeded its resource budget; the result is unknown rather
// than negative.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace declab
