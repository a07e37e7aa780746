#pragma once

// Tokenizer shared by the term and VSA s-expression readers.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "vsta/error.hpp"
#include "vsta/term.hpp"

namespace vsta::detail {

enum class TokenKind { LParen, RParen, Atom, End };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  const Token& peek();
  Token next();
  Token expect(TokenKind kind, const char* what);
  /// Fails unless only whitespace remains.
  void expect_end();

  [[noreturn]] void fail(const Token& at, const std::string& msg) const;

 private:
  void skip_ws();
  Token scan();

  std::string_view text_;
  std::size_t pos_ = 0;
  bool has_peek_ = false;
  Token peeked_{TokenKind::End, {}, 0};
};

/// Maps a symbol occurrence (name, number of arguments, byte offset) to
/// a Symbol, throwing ParseError when it is not acceptable.
using SymbolResolver =
    std::function<Symbol(std::string_view, std::uint32_t, std::size_t)>;

/// Reads one term starting at the lexer's current token.
Term read_term(Lexer& lex, const SymbolResolver& resolve);

/// Resolver that only accepts symbols of `sig`.
SymbolResolver strict_resolver(const Signature& sig);

/// Resolver that adds unseen symbols to `sig` and rejects arity conflicts.
SymbolResolver inferring_resolver(Signature& sig);

}  // namespace vsta::detail
