#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tieknot {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation that needs a well-formed knot received one that is not.
class InvalidKnotError : public Error {
 public:
  using Error::Error;
};

/// Index, name or size argument outside the supported range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A grammar that cannot be generated or counted (dangling nonterminal,
/// size-0 cycle, ...).
class GrammarError : public Error {
 public:
  using Error::Error;
};

}  // namespace tieknot
