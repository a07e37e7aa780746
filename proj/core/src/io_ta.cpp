#include <algorithm>
#include <optional>

#include "vsta/error.hpp"
#include "vsta/io.hpp"

namespace vsta {

namespace {

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

// Cursor over one line of an automaton file.
class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no, std::size_t base)
      : line_(line), line_no_(line_no), base_(base) {}

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= line_.size();
  }
  std::size_t offset() const { return base_ + pos_; }

  std::string_view ident(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= line_.size() || !ident_start(line_[pos_])) fail(std::string("expected ") + what);
    while (pos_ < line_.size() && ident_char(line_[pos_])) ++pos_;
    return line_.substr(start, pos_ - start);
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (line_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  [[noreturn]] void fail(const std::string& msg,
                         ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, msg, base_ + pos_, line_no_);
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

TreeAutomaton load(std::string_view text, const Signature* fixed) {
  TreeAutomaton a;
  auto state = [&a](std::string_view name) {
    if (auto q = a.find_state(name)) return *q;
    return a.add_state(std::string(name));
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineParser p(line, line_no, start);
    if (!p.at_end()) {
      const std::size_t head_offset = p.offset();
      const std::string_view first = p.ident("a symbol or 'final'");
      if (first == "final" && !p.accept("(")) {
        const StateId q = state(p.ident("a state name"));
        if (!p.at_end()) p.fail("trailing text after final state");
        a.add_final(q);
      } else {
        if (first != "final") p.expect("(");
        std::vector<StateId> children;
        if (!p.accept(")")) {
          children.push_back(state(p.ident("a state name")));
          while (p.accept(",")) children.push_back(state(p.ident("a state name")));
          p.expect(")");
        }
        p.expect("->");
        const StateId target = state(p.ident("a target state"));
        if (!p.at_end()) p.fail("trailing text after transition");

        const Symbol sym{std::string(first), static_cast<std::uint32_t>(children.size())};
        if (fixed != nullptr) {
          const Symbol* known = fixed->find(first);
          if (known == nullptr) {
            throw ParseError(ParseError::Kind::UnknownSymbol,
                             "unknown symbol '" + sym.name + "'", head_offset, line_no);
          }
          if (known->arity != sym.arity) {
            throw ParseError(ParseError::Kind::Arity,
                             "symbol '" + sym.name + "' has arity " +
                                 std::to_string(known->arity),
                             head_offset, line_no);
          }
        }
        const Symbol* seen = a.signature().find(first);
        if (seen != nullptr && seen->arity != sym.arity) {
          throw ParseError(ParseError::Kind::Arity,
                           "symbol '" + sym.name + "' used with arity " +
                               std::to_string(seen->arity) + " and " +
                               std::to_string(sym.arity),
                           head_offset, line_no);
        }
        a.add_transition(sym, children, target);
      }
    }
    start = end + 1;
  }
  if (fixed != nullptr) {
    for (const Symbol& s : fixed->symbols()) a.add_symbol(s);
  }
  return a;
}

}  // namespace

TreeAutomaton load_ta(std::string_view text) { return load(text, nullptr); }

TreeAutomaton load_ta(std::string_view text, const Signature& sig) { return load(text, &sig); }

std::string save_ta(const TreeAutomaton& a) {
  std::vector<std::string> finals;
  for (StateId q : a.final_states()) finals.push_back(a.state_name(q));
  std::sort(finals.begin(), finals.end());

  struct Line {
    std::string head;
    std::vector<std::string> children;
    std::string target;
    auto operator<=>(const Line&) const = default;
  };
  std::vector<Line> lines;
  for (const Transition& t : a.expanded_transitions()) {
    Line l{t.head.name, {}, a.state_name(t.target)};
    for (StateId c : t.children) l.children.push_back(a.state_name(c));
    lines.push_back(std::move(l));
  }
  std::sort(lines.begin(), lines.end());

  std::string out;
  for (const auto& f : finals) out += "final " + f + "\n";
  for (const auto& l : lines) {
    out += l.head + "(";
    for (std::size_t i = 0; i < l.children.size(); ++i) {
      if (i > 0) out += ',';
      out += l.children[i];
    }
    out += ") -> " + l.target + "\n";
  }
  return out;
}

}  // namespace vsta
