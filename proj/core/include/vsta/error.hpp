#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vsta {

/// Malformed input text. `offset` is a byte offset for s-expression
/// inputs; `line` is set (1-based) for line-oriented automaton files.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownSymbol, Arity, DanglingRef, DuplicateLabel };

  ParseError(Kind kind, const std::string& what, std::size_t offset,
             std::size_t line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : "offset " + std::to_string(offset) + ": " + what),
        kind_(kind),
        offset_(offset),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t offset_;
  std::size_t line_;
};

/// A symbol was used with an arity other than the one it is declared with.
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A name was not found in the signature.
class UnknownSymbolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two signatures disagree on the arity of a shared symbol.
class SignatureMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The denotation has more distinct terms than the caller allowed.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(std::size_t limit)
      : std::runtime_error("language has more than " + std::to_string(limit) +
                           " terms"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// Enumeration or counting was requested on an automaton with a cycle.
class CyclicAutomatonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A VSA handed to a normalized-only operation breaks the normal form.
class InvalidVsaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vsta
