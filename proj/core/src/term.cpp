#include "vsta/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lexer.hpp"
#include "vsta/error.hpp"

namespace vsta {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void print_to(std::string& out, const Term& t) {
  if (t.is_constant()) {
    out += t.head().name;
    return;
  }
  out += '(';
  out += t.head().name;
  for (const Term& c : t.children()) {
    out += ' ';
    print_to(out, c);
  }
  out += ')';
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c); });
}

Signature::Signature(std::initializer_list<Symbol> symbols) {
  for (const Symbol& s : symbols) add(s);
}

const Symbol& Signature::add(Symbol sym) {
  if (!is_identifier(sym.name)) {
    throw std::invalid_argument("invalid symbol name '" + sym.name + "'");
  }
  if (auto it = index_.find(sym.name); it != index_.end()) {
    const Symbol& existing = symbols_[it->second];
    if (existing.arity != sym.arity) {
      throw SignatureMismatchError("symbol '" + sym.name + "' declared with arity " +
                                   std::to_string(existing.arity) + " and " +
                                   std::to_string(sym.arity));
    }
    return existing;
  }
  index_.emplace(sym.name, symbols_.size());
  symbols_.push_back(std::move(sym));
  return symbols_.back();
}

const Symbol* Signature::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &symbols_[it->second];
}

const Symbol& Signature::at(std::string_view name) const {
  const Symbol* s = find(name);
  if (s == nullptr) throw UnknownSymbolError("unknown symbol '" + std::string(name) + "'");
  return *s;
}

bool Signature::contains(const Symbol& sym) const {
  const Symbol* s = find(sym.name);
  return s != nullptr && s->arity == sym.arity;
}

Signature Signature::merge(const Signature& a, const Signature& b) {
  Signature out = a;
  for (const Symbol& s : b.symbols()) out.add(s);
  return out;
}

bool operator==(const Signature& a, const Signature& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.symbols_.begin(), a.symbols_.end(),
                     [&](const Symbol& s) { return b.contains(s); });
}

Term::Term(Symbol head, std::vector<Term> children) {
  if (children.size() != head.arity) {
    throw ArityError("symbol '" + head.name + "' has arity " +
                     std::to_string(head.arity) + ", given " +
                     std::to_string(children.size()) + " children");
  }
  std::size_t h = mix(std::hash<std::string>{}(head.name), head.arity);
  std::size_t size = 1;
  std::size_t height = 0;
  for (const Term& c : children) {
    h = mix(h, c.hash());
    size += c.size();
    height = std::max(height, c.height());
  }
  node_ = std::make_shared<const Node>(
      Node{std::move(head), std::move(children), h, size, height + 1});
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return term_ord(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) { return term_ord(a, b); }

std::strong_ordering term_ord(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.head().name <=> b.head().name; c != 0) return c;
  if (auto c = a.head().arity <=> b.head().arity; c != 0) return c;
  auto ac = a.children();
  auto bc = b.children();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (auto c = term_ord(ac[i], bc[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Term parse_term(std::string_view text, const Signature& sig) {
  detail::Lexer lex(text);
  Term t = detail::read_term(lex, detail::strict_resolver(sig));
  lex.expect_end();
  return t;
}

std::string print_term(const Term& t) {
  std::string out;
  print_to(out, t);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print_term(t); }

void sort_unique(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
}

}  // namespace vsta
