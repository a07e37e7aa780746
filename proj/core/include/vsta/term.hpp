#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vsta {

/// A function symbol. Arity 0 symbols are constants.
struct Symbol {
  std::string name;
  std::uint32_t arity = 0;

  auto operator<=>(const Symbol&) const = default;
};

/// True iff `name` matches [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

/// A finite set of symbols with one arity per name.
class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<Symbol> symbols);

  /// Adds `sym`, or does nothing if it is already present. Throws
  /// SignatureMismatchError when the name is known with another arity and
  /// std::invalid_argument when the name is not an identifier.
  const Symbol& add(Symbol sym);

  const Symbol* find(std::string_view name) const;
  /// Throws UnknownSymbolError.
  const Symbol& at(std::string_view name) const;
  bool contains(const Symbol& sym) const;

  /// Symbols in insertion order.
  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  /// Union of two signatures; throws SignatureMismatchError on an arity
  /// conflict.
  static Signature merge(const Signature& a, const Signature& b);

  friend bool operator==(const Signature& a, const Signature& b);

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// An immutable ground term. Copies share structure.
class Term {
 public:
  /// Throws ArityError when children.size() != head.arity.
  Term(Symbol head, std::vector<Term> children = {});

  const Symbol& head() const { return node_->head; }
  std::span<const Term> children() const { return node_->children; }
  bool is_constant() const { return node_->children.empty(); }

  /// Number of symbol occurrences.
  std::size_t size() const { return node_->size; }
  /// A constant has height 1.
  std::size_t height() const { return node_->height; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend std::strong_ordering term_ord(const Term& a, const Term& b);

 private:
  struct Node {
    Symbol head;
    std::vector<Term> children;
    std::size_t hash;
    std::size_t size;
    std::size_t height;
  };
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// Total order: head name, then arity, then children left to right.
std::strong_ordering term_ord(const Term& a, const Term& b);

/// Parses one term in s-expression syntax. Every symbol must be in `sig`
/// with a matching arity. Throws ParseError carrying the byte offset.
Term parse_term(std::string_view text, const Signature& sig);

/// Canonical text: constants bare, applications as "(head child ...)".
std::string print_term(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);

/// Sorts by term_ord and drops duplicates.
void sort_unique(std::vector<Term>& terms);

}  // namespace vsta
