#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace vsta;
using vsta::test::fig1_signature;
using vsta::test::term;

TEST_CASE("parse_term reads the canonical examples") {
  const Term t = term("(f (g a) (g b))");
  CHECK(t.head().name == "f");
  REQUIRE(t.children().size() == 2);
  CHECK(t.children()[0] == term("(g a)"));
  CHECK(t.children()[1] == term("(g b)"));
  CHECK(print_term(t) == "(f (g a) (g b))");

  const Term a = term("a");
  CHECK(a.is_constant());
  CHECK(print_term(a) == "a");

  const Term chain = term("(g (g (g a)))");
  CHECK(chain.height() == 4);
  CHECK(chain.size() == 4);
  CHECK(print_term(chain) == "(g (g (g a)))");
}

TEST_CASE("parse_term normalizes whitespace") {
  CHECK(print_term(term("  (f\t(g  a)\n (g b) )  ")) == "(f (g a) (g b))");
}

TEST_CASE("parse_term errors carry byte offsets") {
  auto fails = [](const char* text, ParseError::Kind kind, std::size_t offset) {
    try {
      (void)term(text);
      FAIL("expected a parse error for " << text);
    } catch (const ParseError& e) {
      CHECK(e.kind() == kind);
      CHECK(e.offset() == offset);
    }
  };
  fails("(f a zz)", ParseError::Kind::UnknownSymbol, 5);
  fails("(g a b)", ParseError::Kind::Arity, 1);
  fails("(f a", ParseError::Kind::Syntax, 4);
  fails("(a)", ParseError::Kind::Syntax, 2);
  fails("a b", ParseError::Kind::Syntax, 2);
  fails("(f a $)", ParseError::Kind::Syntax, 5);
  fails("", ParseError::Kind::Syntax, 0);
  fails("(1 a)", ParseError::Kind::Syntax, 1);
}

TEST_CASE("Term construction checks arity") {
  CHECK_THROWS_AS(Term(Symbol{"f", 2}, {term("a")}), ArityError);
}

TEST_CASE("Signature keeps one arity per name") {
  Signature sig;
  sig.add({"f", 2});
  CHECK_NOTHROW(sig.add({"f", 2}));
  CHECK(sig.size() == 1);
  CHECK_THROWS_AS(sig.add({"f", 1}), SignatureMismatchError);
  CHECK_THROWS_AS(sig.add({"9x", 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)sig.at("g"), UnknownSymbolError);
  CHECK_THROWS_AS(Signature::merge(sig, Signature{{"f", 3}}), SignatureMismatchError);
  CHECK(Signature::merge(sig, Signature{{"a", 0}}).size() == 2);
}

TEST_CASE("term_ord follows name, arity, then children") {
  CHECK(term_ord(term("a"), term("b")) < 0);
  CHECK(term_ord(term("(g a)"), term("(g b)")) < 0);
  CHECK(term_ord(term("(f a b)"), term("(f a c)")) < 0);
  CHECK(term_ord(term("(f c a)"), term("(g a)")) < 0);
  CHECK(term_ord(Term(Symbol{"h", 0}), Term(Symbol{"h", 1}, {term("a")})) < 0);
  CHECK(term_ord(term("(f a b)"), term("(f a b)")) == 0);
}

TEST_CASE("sorting any permutation of the nine terms gives one sequence") {
  const auto expected = vsta::test::fig1_terms();
  REQUIRE(std::is_sorted(expected.begin(), expected.end()));
  testgen::SplitMix64 rng(99);
  for (int round = 0; round < 200; ++round) {
    auto shuffled = expected;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    }
    std::sort(shuffled.begin(), shuffled.end());
    CHECK(shuffled == expected);
  }
}

TEST_CASE("print and parse round-trip on random terms") {
  testgen::SplitMix64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Term t = vsta::test::random_term(rng, fig1_signature(), 1 + rng.below(6));
    const std::string text = print_term(t);
    const Term back = parse_term(text, fig1_signature());
    CHECK(back == t);
    CHECK(print_term(back) == text);
    CHECK(back.hash() == t.hash());
  }
}

TEST_CASE("term_ord is a total order on random triples") {
  testgen::SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Term x = vsta::test::random_term(rng, fig1_signature(), 3);
    const Term y = vsta::test::random_term(rng, fig1_signature(), 3);
    const Term z = vsta::test::random_term(rng, fig1_signature(), 3);
    // antisymmetry and totality
    CHECK((term_ord(x, y) < 0) == (term_ord(y, x) > 0));
    CHECK((term_ord(x, y) == 0) == (x == y));
    // transitivity
    if (term_ord(x, y) <= 0 && term_ord(y, z) <= 0) CHECK(term_ord(x, z) <= 0);
  }
}
