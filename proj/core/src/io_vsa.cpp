#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include "lexer.hpp"
#include "vsta/error.hpp"
#include "vsta/io.hpp"

namespace vsta {

namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

class VsaReader {
 public:
  VsaReader(std::string_view text, VsaStore& store)
      : lex_(text), store_(store), resolve_(detail::inferring_resolver(sig_)) {
    for (const Symbol& s : store.signature().symbols()) sig_.add(s);
  }

  NodeLabel read_document() {
    NodeLabel root = read_node();
    lex_.expect_end();
    return root;
  }

 private:
  NodeLabel read_node() {
    lex_.expect(TokenKind::LParen, "'('");
    const Token tag = lex_.expect(TokenKind::Atom, "U, J, S or ref");
    if (tag.text == "S") return read_set();
    if (tag.text == "ref") {
      const Token lt = lex_.expect(TokenKind::Atom, "a label");
      const std::uint64_t label = parse_label(lt);
      lex_.expect(TokenKind::RParen, "')'");
      if (auto it = defined_.find(label); it != defined_.end()) return it->second;
      const char* why = open_.count(label) ? "reference to a node that contains it"
                                           : "reference to undefined label";
      throw ParseError(ParseError::Kind::DanglingRef,
                       std::string(why) + " " + std::to_string(label), lt.offset);
    }
    if (tag.text != "U" && tag.text != "J") lex_.fail(tag, "expected U, J, S or ref");

    const Token lt = lex_.expect(TokenKind::Atom, "a label");
    const std::uint64_t label = parse_label(lt);
    if (defined_.count(label) || !open_.insert(label).second) {
      throw ParseError(ParseError::Kind::DuplicateLabel,
                       "label " + std::to_string(label) + " defined twice", lt.offset);
    }

    std::optional<Token> head;
    if (tag.text == "J") {
      head = lex_.expect(TokenKind::Atom, "a symbol");
      if (!is_identifier(head->text)) lex_.fail(*head, "expected a symbol");
    }
    std::vector<NodeLabel> children;
    while (lex_.peek().kind != TokenKind::RParen) children.push_back(read_node());
    lex_.next();

    NodeLabel n;
    if (head) {
      const Symbol sym =
          resolve_(head->text, static_cast<std::uint32_t>(children.size()), head->offset);
      n = store_.mk_join(sym, children);
    } else {
      n = store_.mk_union(children);
    }
    open_.erase(label);
    defined_.emplace(label, n);
    return n;
  }

  NodeLabel read_set() {
    std::vector<Term> terms;
    while (lex_.peek().kind != TokenKind::RParen) {
      if (lex_.peek().kind == TokenKind::End) lex_.fail(lex_.peek(), "expected ')'");
      terms.push_back(detail::read_term(lex_, resolve_));
    }
    lex_.next();
    return store_.mk_set(std::move(terms));
  }

  std::uint64_t parse_label(const Token& t) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || v == 0) {
      lex_.fail(t, "expected a positive integer label");
    }
    return v;
  }

  Lexer lex_;
  VsaStore& store_;
  Signature sig_;
  detail::SymbolResolver resolve_;
  std::unordered_map<std::uint64_t, NodeLabel> defined_;
  std::unordered_set<std::uint64_t> open_;
};

class VsaWriter {
 public:
  explicit VsaWriter(const VsaStore& store) : store_(store) {}

  void write(NodeLabel n) {
    const auto& node = store_.node(n);
    if (node.kind == NodeKind::Set) {
      out_ += "(S";
      for (const Term& t : node.terms) {
        out_ += ' ';
        out_ += print_term(t);
      }
      out_ += ')';
      return;
    }
    if (auto it = labels_.find(n.value); it != labels_.end()) {
      out_ += "(ref " + std::to_string(it->second) + ")";
      return;
    }
    const std::size_t label = labels_.size() + 1;
    labels_.emplace(n.value, label);
    out_ += node.kind == NodeKind::Union ? "(U " : "(J ";
    out_ += std::to_string(label);
    if (node.kind == NodeKind::Join) {
      out_ += ' ';
      out_ += node.head.name;
    }
    for (NodeLabel c : node.children) {
      out_ += ' ';
      write(c);
    }
    out_ += ')';
  }

  std::string take() { return std::move(out_); }

 private:
  const VsaStore& store_;
  std::unordered_map<std::uint32_t, std::size_t> labels_;
  std::string out_;
};

}  // namespace

NodeLabel load_vsa(std::string_view text, VsaStore& store) {
  return VsaReader(text, store).read_document();
}

std::string save_vsa(const VsaStore& store, NodeLabel root) {
  VsaWriter w(store);
  w.write(root);
  return w.take() + "\n";
}

}  // namespace vsta
