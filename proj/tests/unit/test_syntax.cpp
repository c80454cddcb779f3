#include <doctest.h>

#include "epdl/axioms.hpp"
#include "epdl/errors.hpp"
#include "epdl/parser.hpp"
#include "../support/oracles.hpp"

using namespace epdl;

TEST_SUITE("syntax") {

TEST_CASE("parse builds the expected trees") {
  const Formula safe = prop("Safe");
  CHECK(parse_formula("K [r][u](Safe & K Safe)") ==
        know(box(act("r"), box(act("u"), conj(safe, know(safe))))));
  const Program guard = seq(test(know(diamond(act("a"), top()))), act("a"));
  CHECK(parse_formula("<(?K<a>T ; a)*> K p") == diamond(star(guard), know(prop("p"))));
  CHECK(parse_formula("p -> q -> r") == implies(prop("p"), implies(prop("q"), prop("r"))));
  CHECK(parse_formula("p & q | r") == disj(conj(prop("p"), prop("q")), prop("r")));
  CHECK(parse_formula("[[a;b]]p") == strong(seq(act("a"), act("b")), prop("p")));
  CHECK(parse_formula("Kh F") == know_hat(bottom()));
  CHECK(parse_program("a;b+c*") == choice(seq(act("a"), act("b")), star(act("c"))));
  CHECK(parse_program("a;b;c") == seq(seq(act("a"), act("b")), act("c")));
}

TEST_CASE("abbreviations expand to the core") {
  const Formula p = prop("p"), q = prop("q");
  const Program a = act("a");
  CHECK(diamond(a, p) == neg(box(a, neg(p))));
  CHECK(know_hat(p) == neg(know(neg(p))));
  CHECK(strong(a, p) == conj(box(a, p), diamond(a, p)));
  CHECK(bottom() == neg(top()));
  CHECK(disj(p, q) == neg(conj(neg(p), neg(q))));
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_formula("p & | q"), ParseError);
  try {
    parse_formula("p &\n  | q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_formula("[a p"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_program("a;"), ParseError);
}

TEST_CASE("sizes follow the inductive clauses") {
  CHECK(formula_size(prop("p")) == 1);
  CHECK(formula_size(top()) == 1);
  CHECK(formula_size(parse_formula("[a]p")) == 2);
  CHECK(formula_size(parse_formula("~(p & q)")) == 4);
  CHECK(formula_size(parse_formula("K p")) == 2);
  CHECK(program_size(parse_program("a;b")) == 3);
  CHECK(program_size(parse_program("a+b")) == 3);
  CHECK(program_size(parse_program("?p")) == 2);
  CHECK(program_size(parse_program("(a;b)*")) == 4);
  // Derived connectives are sized after expansion: ~[a]~p.
  CHECK(formula_size(parse_formula("<a>p")) == 4);
}

TEST_CASE("star_free sees through tests") {
  CHECK(parse_formula("[a;?K p]q").star_free());
  CHECK_FALSE(parse_formula("[a*]q").star_free());
  CHECK_FALSE(parse_formula("[?<b*>p]q").star_free());
  CHECK_FALSE(parse_program("?[a*]p").star_free());
}

TEST_CASE("subformulas include test bodies") {
  auto as_set = [](const std::vector<Formula>& v) {
    std::set<std::string> s;
    for (const auto& f : v) s.insert(to_string(f));
    return s;
  };
  CHECK(subformulas(prop("p")).size() == 1);
  const Formula f = parse_formula("[?q;a]p");
  CHECK(as_set(subformulas(f)) ==
        std::set<std::string>{to_string(f), "p", "q"});
  const Formula g = parse_formula("K p & p");
  CHECK(subformulas(g).size() == 3);
  CHECK(subformulas(g).front() == g);
}

TEST_CASE("language alphabet is first-appearance ordered") {
  const auto sig = language_alphabet(parse_program("(?K p;a)+(b;?K p)"));
  REQUIRE(sig.size() == 3);
  CHECK(sig[0] == SequenceItem::check(know(prop("p"))));
  CHECK(sig[1] == SequenceItem::action("a"));
  CHECK(sig[2] == SequenceItem::action("b"));
  CHECK(language_alphabet(act("a")).size() == 1);
  const auto dup = language_alphabet(parse_program("(a+b);a"));
  CHECK(dup == std::vector<SequenceItem>{SequenceItem::action("a"), SequenceItem::action("b")});
}

TEST_CASE("strip_tests keeps actions in order") {
  const ComputationSequence w{SequenceItem::check(know(prop("p"))), SequenceItem::action("a"),
                              SequenceItem::check(prop("q")), SequenceItem::action("b")};
  const auto r = strip_tests(w);
  CHECK(r == ComputationSequence{SequenceItem::action("a"), SequenceItem::action("b")});
  CHECK(strip_tests(r) == r);
  CHECK(strip_tests({}).empty());
  CHECK(actions_of(w) == ActionSequence{"a", "b"});
}

TEST_CASE("planning formula builders") {
  const Formula p = prop("p");
  CHECK(build_theta({"a2", "a1"}, p) ==
        parse_formula("<((?K<a1>T;a1)+(?K<a2>T;a2))*>K p"));
  CHECK(build_theta({"a"}, p) == parse_formula("<(?K<a>T;a)*>K p"));
  CHECK_THROWS_AS(build_theta({}, p), ContractError);
  CHECK(build_plan_formula({}, p) == know(p));
  CHECK(build_plan_formula({"a"}, p) == know(conj(box(act("a"), p), diamond(act("a"), p))));
  CHECK(build_plan_formula({"r", "u"}, prop("Safe")) == parse_formula("K [[r]][[u]]Safe"));
  CHECK(build_guarded_plan_formula({"a", "b"}, p) ==
        parse_formula("<(?K<a>T;a);(?K<b>T;b)>K p"));
  CHECK(program_free(parse_formula("K (p & ~K q)")));
  CHECK_FALSE(program_free(parse_formula("K [a]p")));
}

TEST_CASE("printer round-trips random formulas") {
  std::mt19937_64 rng(42);
  FormulaOptions opt;
  opt.depth = 4;
  opt.props = {"p", "q", "Safe"};
  opt.actions = {"a", "b", "r"};
  opt.star_depth = 2;
  for (int i = 0; i < 500; ++i) {
    const Formula f = random_formula(rng, opt);
    const std::string text = to_string(f);
    INFO(text);
    CHECK(parse_formula(text) == f);
  }
}

TEST_CASE("language alphabet matches an AST scan") {
  std::mt19937_64 rng(5);
  FormulaOptions opt;
  opt.depth = 2;
  for (int i = 0; i < 200; ++i) {
    const Program p = random_program(rng, opt, 3);
    const auto sig = language_alphabet(p);
    std::set<std::string> from_sig, from_words;
    for (const auto& item : sig) from_sig.insert(to_string(item));
    CHECK(from_sig.size() == sig.size());
    if (p.star_free())
      for (const auto& w : oracle::language(p))
        for (const auto& letter : w) from_words.insert(letter);
    if (p.star_free()) CHECK(from_sig == from_words);
  }
}

}
