// vsta: normalize, embed and query version space algebras and tree automata.
//
// Exit codes: 0 success, 1 member-reject or check-mismatch, 2 usage or I/O
// error, 3 malformed input, 4 language too large (or infinite).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "vsta/testgen.hpp"
#include "vsta/vsta.hpp"

namespace {

enum Exit : int { kOk = 0, kRejected = 1, kUsage = 2, kBadInput = 3, kTooLarge = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
}

// VSA files start with '(' once blank and '#' comment lines are skipped.
bool looks_like_vsa(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      return c == '(';
    }
  }
  return false;
}

// A loaded input file: either a VSA (in `store`) or an automaton.
struct Input {
  vsta::VsaStore store;
  std::optional<vsta::NodeLabel> vsa;
  std::optional<vsta::TreeAutomaton> ta;

  vsta::TreeAutomaton automaton() {
    if (ta) return *ta;
    const auto norm = vsta::normalize(store, *vsa);
    return vsta::embed(store, norm).automaton;
  }
};

Input load_input(const std::string& path) {
  Input in;
  const std::string text = read_file(path);
  if (looks_like_vsa(text)) {
    in.vsa = vsta::load_vsa(text, in.store);
  } else {
    in.ta = vsta::load_ta(text);
  }
  return in;
}

Input load_vsa_input(const std::string& path) {
  Input in = load_input(path);
  if (!in.vsa) throw vsta::ParseError(vsta::ParseError::Kind::Syntax, "expected a VSA file", 0);
  return in;
}

std::string join_lines(const std::vector<vsta::Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    out += vsta::print_term(t);
    out += '\n';
  }
  return out;
}

std::string format_stats(const vsta::EmbeddingResult& r, const vsta::LinearityReport& lin) {
  std::ostringstream os;
  os << "vsa.unions " << r.vsa_size.unions << "\n"
     << "vsa.joins " << r.vsa_size.joins << "\n"
     << "vsa.nodes " << r.vsa_size.nodes() << "\n"
     << "vsa.edges " << r.vsa_size.edges() << "\n"
     << "ta.states " << r.ta_size.states << "\n"
     << "ta.factored_transitions " << r.ta_size.factored_transitions << "\n"
     << "ta.expanded_transitions " << r.ta_size.expanded_transitions << "\n"
     << "ta.arity_sum " << r.ta_size.arity_sum << "\n";
  for (const auto& c : lin.checks) {
    os << "check " << (c.holds() ? "ok" : "FAIL") << " " << c.automaton_side
       << " == " << c.vsa_side << " (" << c.name << ")\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Version space algebras and bottom-up tree automata"};
  app.require_subcommand(1);

  std::string input;
  std::string second;
  std::string output;
  std::string term_text;
  std::size_t limit = 10000;
  bool stats = false;
  bool normalized_view = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normalize a VSA");
  normalize_cmd->add_option("input", input, "VSA file")->required();
  normalize_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* embed_cmd = app.add_subcommand("embed", "Normalize a VSA and embed it as an automaton");
  embed_cmd->add_option("input", input, "VSA file")->required();
  embed_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  embed_cmd->add_flag("--stats", stats, "Print sizes and the linearity equalities");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the language, one term per line");
  enumerate_cmd->add_option("input", input, "VSA or automaton file")->required();
  enumerate_cmd->add_option("--limit", limit, "Maximum number of terms")->check(CLI::PositiveNumber);

  auto* count_cmd = app.add_subcommand("count", "Count accepting derivations");
  count_cmd->add_option("input", input, "VSA or automaton file")->required();

  auto* member_cmd = app.add_subcommand("member", "Test whether a term is accepted");
  member_cmd->add_option("input", input, "Automaton or VSA file")->required();
  member_cmd->add_option("term", term_text, "Term in s-expression syntax")->required();

  auto* intersect_cmd = app.add_subcommand("intersect", "Product of two automata");
  intersect_cmd->add_option("a", input, "First automaton or VSA")->required();
  intersect_cmd->add_option("b", second, "Second automaton or VSA")->required();
  intersect_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
  dot_cmd->add_option("input", input, "VSA or automaton file")->required();
  dot_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  dot_cmd->add_flag("--normalized", normalized_view, "Render a VSA after normalizing it");

  vsta::testgen::GenConfig gen_cfg;
  std::string mode = "mixed";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random VSA");
  gen_cmd->add_option("--seed", gen_cfg.seed, "PRNG seed")->required();
  gen_cmd->add_option("--depth", gen_cfg.max_depth, "Maximum term height")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--width", gen_cfg.max_union_width, "Maximum union width")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--share", gen_cfg.share_probability, "Probability of reusing a node")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--max-terms", gen_cfg.max_terms, "Bound on the language size")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--mode", mode, "mixed, disjoint or ambiguous")
      ->check(CLI::IsMember({"mixed", "disjoint", "ambiguous"}));
  gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* check_cmd = app.add_subcommand("check", "Compare a VSA's language with its embedding's");
  check_cmd->add_option("input", input, "VSA file")->required();
  check_cmd->add_option("--limit", limit, "Maximum number of terms")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*normalize_cmd) {
      Input in = load_vsa_input(input);
      const auto norm = vsta::normalize(in.store, *in.vsa);
      write_output(output, vsta::save_vsa(in.store, norm.root()));
      return kOk;
    }

    if (*embed_cmd) {
      Input in = load_vsa_input(input);
      const auto norm = vsta::normalize(in.store, *in.vsa);
      const auto result = vsta::embed(in.store, norm);
      write_output(output, vsta::save_ta(result.automaton));
      if (stats) {
        const std::string report =
            format_stats(result, vsta::check_linearity(in.store, norm, result));
        // Statistics go to stdout only when stdout is not carrying the automaton.
        (output.empty() || output == "-" ? std::cerr : std::cout) << report;
      }
      return kOk;
    }

    if (*enumerate_cmd) {
      Input in = load_input(input);
      const auto terms = in.vsa ? vsta::enumerate_vsa(in.store, *in.vsa, limit)
                                : vsta::enumerate_ta(*in.ta, limit);
      std::cout << join_lines(terms);
      return kOk;
    }

    if (*count_cmd) {
      Input in = load_input(input);
      const auto a = in.automaton();
      const auto counts = vsta::count_paths(a);
      std::cout << counts.total << ' ' << (vsta::is_unambiguous(a) ? "exact" : "upper-bound")
                << '\n';
      return kOk;
    }

    if (*member_cmd) {
      Input in = load_input(input);
      const auto a = in.automaton();
      const vsta::Term t = vsta::parse_term(term_text, a.signature());
      const bool accepted = vsta::run_membership(a, t).accepted;
      std::cout << (accepted ? "accept" : "reject") << '\n';
      return accepted ? kOk : kRejected;
    }

    if (*intersect_cmd) {
      Input lhs = load_input(input);
      Input rhs = load_input(second);
      write_output(output, vsta::save_ta(vsta::intersect(lhs.automaton(), rhs.automaton())));
      return kOk;
    }

    if (*dot_cmd) {
      Input in = load_input(input);
      if (in.ta) {
        write_output(output, vsta::to_dot(*in.ta));
      } else {
        vsta::NodeLabel root = *in.vsa;
        if (normalized_view) root = vsta::normalize(in.store, root).root();
        write_output(output, vsta::to_dot(in.store, root));
      }
      return kOk;
    }

    if (*gen_cmd) {
      if (mode == "disjoint") gen_cfg.mode = vsta::testgen::GenMode::Disjoint;
      if (mode == "ambiguous") gen_cfg.mode = vsta::testgen::GenMode::Ambiguous;
      vsta::VsaStore store;
      const auto root = vsta::testgen::gen_vsa(store, gen_cfg);
      write_output(output, vsta::save_vsa(store, root));
      return kOk;
    }

    if (*check_cmd) {
      Input in = load_vsa_input(input);
      const auto direct = vsta::enumerate_vsa(in.store, *in.vsa, limit);
      const auto norm = vsta::normalize(in.store, *in.vsa);
      const auto result = vsta::embed(in.store, norm);
      const auto via_automaton = vsta::enumerate_ta(result.automaton, limit);
      const auto lin = vsta::check_linearity(in.store, norm, result);
      const bool equal = direct == via_automaton;
      std::cout << (equal ? "equal" : "mismatch") << ' ' << direct.size() << ' '
                << via_automaton.size() << '\n';
      if (!equal) std::cerr << "vsa and automaton languages differ\n";
      if (!lin.holds()) std::cerr << "size equalities do not hold\n";
      return equal && lin.holds() ? kOk : kRejected;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const vsta::OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const vsta::CyclicAutomatonError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const vsta::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kUsage;
}
