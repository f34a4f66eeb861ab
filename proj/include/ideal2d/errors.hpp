// Error hierarchy shared by the whole library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ideal2d {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called with arguments outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exhausted before the computation finished.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always indicates a bug in the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Always-on invariant check, enabled in every build mode.
inline void check_internal(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace ideal2d
