#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treecong {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Newick syntax or content problem. `offset()` is the byte position in the
/// input at which the problem was detected.
class ParseError : public Error {
 public:
  enum class Kind {
    UnbalancedParentheses,
    DuplicateLeafLabel,
    EmptyLabel,
    TrailingGarbage,
  };

  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : Error(what + " (byte " + std::to_string(offset) + ")"),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

class LeafNotFound : public Error {
 public:
  using Error::Error;
};

class TooFewLeaves : public Error {
 public:
  using Error::Error;
};

class InsufficientOverlap : public Error {
 public:
  using Error::Error;
};

class LeafSetMismatch : public Error {
 public:
  using Error::Error;
};

class LabelSetMismatch : public Error {
 public:
  using Error::Error;
};

class NonBinaryInput : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateTarget : public Error {
 public:
  using Error::Error;
};

class DegenerateAllTies : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class TooSmall : public Error {
 public:
  using Error::Error;
};

class ValueOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace treecong
