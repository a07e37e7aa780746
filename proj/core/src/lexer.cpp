#include "lexer.hpp"

namespace vsta::detail {

namespace {

bool is_atom_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

void Lexer::skip_ws() {
  while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
}

Token Lexer::scan() {
  skip_ws();
  if (pos_ >= text_.size()) return {TokenKind::End, {}, pos_};
  const std::size_t start = pos_;
  const char c = text_[pos_];
  if (c == '(') {
    ++pos_;
    return {TokenKind::LParen, text_.substr(start, 1), start};
  }
  if (c == ')') {
    ++pos_;
    return {TokenKind::RParen, text_.substr(start, 1), start};
  }
  if (is_atom_char(c)) {
    while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
    return {TokenKind::Atom, text_.substr(start, pos_ - start), start};
  }
  throw ParseError(ParseError::Kind::Syntax,
                   std::string("unexpected character '") + c + "'", start);
}

const Token& Lexer::peek() {
  if (!has_peek_) {
    peeked_ = scan();
    has_peek_ = true;
  }
  return peeked_;
}

Token Lexer::next() {
  if (has_peek_) {
    has_peek_ = false;
    return peeked_;
  }
  return scan();
}

Token Lexer::expect(TokenKind kind, const char* what) {
  Token t = next();
  if (t.kind != kind) fail(t, std::string("expected ") + what);
  return t;
}

void Lexer::expect_end() {
  const Token& t = peek();
  if (t.kind != TokenKind::End) fail(t, "trailing input");
}

void Lexer::fail(const Token& at, const std::string& msg) const {
  std::string found;
  switch (at.kind) {
    case TokenKind::LParen: found = "'('"; break;
    case TokenKind::RParen: found = "')'"; break;
    case TokenKind::Atom: found = "'" + std::string(at.text) + "'"; break;
    case TokenKind::End: found = "end of input"; break;
  }
  throw ParseError(ParseError::Kind::Syntax, msg + ", found " + found, at.offset);
}

Term read_term(Lexer& lex, const SymbolResolver& resolve) {
  Token t = lex.next();
  if (t.kind == TokenKind::Atom) {
    if (!is_identifier(t.text)) lex.fail(t, "expected a symbol");
    return Term(resolve(t.text, 0, t.offset));
  }
  if (t.kind != TokenKind::LParen) lex.fail(t, "expected a term");
  Token head = lex.expect(TokenKind::Atom, "a symbol");
  if (!is_identifier(head.text)) lex.fail(head, "expected a symbol");
  std::vector<Term> children;
  while (lex.peek().kind != TokenKind::RParen) {
    if (lex.peek().kind == TokenKind::End) lex.fail(lex.peek(), "expected ')'");
    children.push_back(read_term(lex, resolve));
  }
  Token close = lex.next();
  if (children.empty()) lex.fail(close, "application without arguments");
  Symbol sym = resolve(head.text, static_cast<std::uint32_t>(children.size()),
                       head.offset);
  return Term(std::move(sym), std::move(children));
}

SymbolResolver strict_resolver(const Signature& sig) {
  return [&sig](std::string_view name, std::uint32_t arity, std::size_t offset) {
    const Symbol* sym = sig.find(name);
    if (sym == nullptr) {
      throw ParseError(ParseError::Kind::UnknownSymbol,
                       "unknown symbol '" + std::string(name) + "'", offset);
    }
    if (sym->arity != arity) {
      throw ParseError(ParseError::Kind::Arity,
                       "symbol '" + sym->name + "' has arity " +
                           std::to_string(sym->arity) + ", applied to " +
                           std::to_string(arity) + " arguments",
                       offset);
    }
    return *sym;
  };
}

SymbolResolver inferring_resolver(Signature& sig) {
  return [&sig](std::string_view name, std::uint32_t arity, std::size_t offset) {
    if (const Symbol* sym = sig.find(name)) {
      if (sym->arity != arity) {
        throw ParseError(ParseError::Kind::Arity,
                         "symbol '" + sym->name + "' used with arity " +
                             std::to_string(sym->arity) + " and " +
                             std::to_string(arity),
                         offset);
      }
      return *sym;
    }
    return sig.add(Symbol{std::string(name), arity});
  };
}

}  // namespace vsta::detail
