#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "meadowlab/axioms.hpp"
#include "meadowlab/eval.hpp"
#include "meadowlab/parser.hpp"
#include "meadowlab/term.hpp"
#include "test_util.hpp"

using namespace meadowlab;

TEST_CASE("numerals unfold by repeated +1") {
  CHECK(numeral(0)->kind == TermKind::Zero);

  const Term n1 = numeral(1);
  REQUIRE(n1->kind == TermKind::Add);
  CHECK(n1->a->kind == TermKind::Zero);
  CHECK(n1->b->kind == TermKind::One);

  // Left-nested: (((0+1)+1)+1)+1.
  Term t = numeral(4);
  for (int k = 0; k < 4; ++k) {
    REQUIRE(t->kind == TermKind::Add);
    CHECK(t->b->kind == TermKind::One);
    t = t->a;
  }
  CHECK(t->kind == TermKind::Zero);
}

TEST_CASE("parser builds the expected trees") {
  const Term t = parse_term("inv(0)");
  REQUIRE(t->kind == TermKind::Inv);
  CHECK(t->a->kind == TermKind::Zero);

  const Term u = parse_term("(1 + x^2) * inv(1 + x^2)");
  REQUIRE(u->kind == TermKind::Mul);
  REQUIRE(u->a->kind == TermKind::Add);
  CHECK(u->a->a->kind == TermKind::One);
  REQUIRE(u->a->b->kind == TermKind::Mul);  // x^2 desugars to x*x
  CHECK(u->a->b->a->name == "x");
  CHECK(u->a->b->b->name == "x");
  REQUIRE(u->b->kind == TermKind::Inv);
  CHECK(term_equal(u->b->a, u->a));
}

TEST_CASE("the imaginary unit needs the extended signature") {
  CHECK_THROWS_AS(parse_term("i * i + 1"), ParseError);
  CHECK_THROWS_AS(parse_term("i * i + 1", Signature::Plain), ParseError);
  const Term t = parse_term("i * i + 1", Signature::Extended);
  CHECK(contains_imaginary(t));

  const Equation plain = parse_equation("x = x", Signature::Extended);
  CHECK(plain.signature == Signature::Plain);
  const Equation ext = parse_equation("i * i + 1 = 0", Signature::Extended);
  CHECK(ext.signature == Signature::Extended);
}

TEST_CASE("sugars: ^2, ^-1, binary minus, decimal numerals") {
  CHECK(term_equal(parse_term("x^2"), mul(var("x"), var("x"))));
  CHECK(term_equal(parse_term("x^-1"), inv(var("x"))));
  CHECK(term_equal(parse_term("a - b"), add(var("a"), neg(var("b")))));
  CHECK(term_equal(parse_term("2"), numeral(2)));
  CHECK(term_equal(parse_term("0"), zero()));
  CHECK(term_equal(parse_term("1"), one()));
  CHECK(term_equal(parse_term("13"), numeral(13)));
  CHECK_THROWS_AS(parse_term("x^3"), ParseError);
  CHECK_THROWS_AS(parse_term("x ^"), ParseError);
}

TEST_CASE("structural limits on parsed input") {
  CHECK(term_equal(parse_term("5000"), numeral(5000)));
  CHECK_THROWS_AS(parse_term("5001"), ParseError);
  CHECK_THROWS_AS(parse_term("99999999999"), ParseError);

  std::string deep = "x";
  for (int k = 0; k < 4000; ++k) deep = "(" + deep + ")";
  CHECK(term_equal(parse_term(deep), var("x")));
  std::string too_deep = "x";
  for (int k = 0; k < 7000; ++k) too_deep = "(" + too_deep + ")";
  CHECK_THROWS_AS(parse_term(too_deep), ParseError);
  CHECK_THROWS_AS(parse_term(std::string(7000, '-') + "x"), ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_term("x + ?");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("x +"), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_term("x y"), ParseError);
}

TEST_CASE("printing") {
  CHECK(print_term(inv(zero())) == "inv(0)");
  CHECK(print_term(numeral(3)) == "((0 + 1) + 1) + 1");
  CHECK(print_term(mul(var("x"), inv(var("x")))) == "x * inv(x)");
  CHECK(print_term(add(var("x"), neg(var("y")))) == "x + -y");
  CHECK(print_term(mul(add(one(), var("x")), var("y"))) == "(1 + x) * y");
  CHECK(print_term(neg(add(var("x"), var("y")))) == "-(x + y)");
}

TEST_CASE("print/parse round-trip on schema instances and random terms") {
  auto roundtrip = [](const Term& t, Signature sig) {
    const Term back = parse_term(print_term(t), sig);
    CHECK(term_equal(back, t));
  };
  for (const Equation& e : md_axioms()) {
    roundtrip(e.lhs, Signature::Plain);
    roundtrip(e.rhs, Signature::Plain);
  }
  for (unsigned n = 1; n <= 8; ++n) {
    roundtrip(l_n(n).lhs, Signature::Plain);
    roundtrip(l_n(n).rhs, Signature::Plain);
  }
  for (unsigned n = 0; n <= 20; ++n) {
    roundtrip(h_n(n).lhs, Signature::Plain);
    roundtrip(h_n(n).rhs, Signature::Plain);
    roundtrip(c_n(n).lhs, Signature::Plain);
    roundtrip(c_n(n).rhs, Signature::Plain);
  }

  std::mt19937_64 rng(20240811);
  testutil::TermGenOptions opt;
  opt.allow_imaginary = true;
  opt.vars = {"x", "y", "z1"};
  opt.max_depth = 7;
  for (int k = 0; k < 400; ++k)
    roundtrip(testutil::random_term(rng, opt), Signature::Extended);

  testutil::TermGenOptions plain = opt;
  plain.allow_imaginary = false;
  for (int k = 0; k < 200; ++k)
    roundtrip(testutil::random_term(rng, plain), Signature::Plain);
}

TEST_CASE("arbitrary input either parses or raises ParseError") {
  const std::string alphabet = "01ixyv()+-*^= in()v_2abc\t";
  std::mt19937_64 rng(1234);
  for (int k = 0; k < 3000; ++k) {
    std::string text;
    const size_t len = rng() % 40;
    for (size_t j = 0; j < len; ++j) text += alphabet[rng() % alphabet.size()];
    try {
      const Term t = parse_term(text, Signature::Extended);
      CHECK(term_equal(parse_term(print_term(t), Signature::Extended), t));
    } catch (const ParseError&) {
      // fine: rejected with a diagnostic
    }
  }
}

TEST_CASE("variable names") {
  CHECK(is_valid_var_name("x"));
  CHECK(is_valid_var_name("x1"));
  CHECK(is_valid_var_name("alpha_2"));
  CHECK_FALSE(is_valid_var_name("X"));
  CHECK_FALSE(is_valid_var_name("1x"));
  CHECK_FALSE(is_valid_var_name("i"));
  CHECK_FALSE(is_valid_var_name("inv"));
  CHECK_FALSE(is_valid_var_name(""));
  CHECK_THROWS_AS(var("Bad"), std::invalid_argument);
}

TEST_CASE("substitution") {
  const Term x = var("x");
  CHECK(substitute(x, {}) == x);  // shares the node untouched
  CHECK(term_equal(substitute(mul(var("x"), var("y")), {{"x", one()}}),
                   mul(one(), var("y"))));

  // Simultaneous, not sequential: {x->y, y->x} swaps.
  const Term swapped =
      substitute(add(var("x"), var("y")), {{"x", var("y")}, {"y", var("x")}});
  CHECK(term_equal(swapped, add(var("y"), var("x"))));
}

TEST_CASE("meadow axiom table") {
  const auto axioms = md_axioms();
  REQUIRE(axioms.size() == 10);
  CHECK(term_equal(axioms[2].lhs, add(var("x"), zero())));
  CHECK(term_equal(axioms[2].rhs, var("x")));
  CHECK(term_equal(axioms[8].lhs, inv(inv(var("x")))));
  CHECK(term_equal(axioms[8].rhs, var("x")));
  CHECK(term_equal(axioms[9].lhs, mul(var("x"), mul(var("x"), inv(var("x"))))));
  CHECK(term_equal(axioms[9].rhs, var("x")));
  CHECK(term_equal(md_axiom(9).lhs, axioms[8].lhs));
  CHECK_THROWS_AS(md_axiom(0), std::invalid_argument);
  CHECK_THROWS_AS(md_axiom(11), std::invalid_argument);
  for (const Equation& e : axioms) CHECK(e.signature == Signature::Plain);
}

TEST_CASE("schema free variables") {
  CHECK_THROWS_AS(l_n(0), std::invalid_argument);
  for (unsigned n = 1; n <= 50; ++n)
    CHECK(free_vars(l_n(n)).size() == n);
  for (unsigned n = 0; n <= 50; ++n) {
    CHECK(free_vars(h_n(n)) == std::set<std::string>{"x"});
    CHECK(free_vars(c_n(n)).empty());
  }
}

TEST_CASE("c_n(0) unfolds the table") {
  const Equation e = c_n(0);
  CHECK(term_equal(e.lhs, mul(add(one(), numeral(0)), inv(add(one(), numeral(0))))));
  CHECK(term_equal(e.rhs, one()));
}

TEST_CASE("schema instances at the size boundary survive a full pass") {
  const Equation big = c_n(5000);  // numeral depth at the documented cap
  CHECK(free_vars(big).empty());
  CHECK(eval(FpModel{7}, big.lhs, {}) ==
        eval(FpModel{7}, mul(numeral(5001 % 7), inv(numeral(5001 % 7))), {}));
  const std::string printed = print_term(big.lhs);
  CHECK(term_equal(parse_term(printed), big.lhs));
  CHECK_THROWS_AS(parse_schema_list({"C:5001"}), std::invalid_argument);
}

TEST_CASE("substituting 0 for x in h_n evaluates like c_n, in every model") {
  for (unsigned n = 0; n <= 20; ++n) {
    const Equation h = h_n(n);
    const Equation c = c_n(n);
    const Term h0_lhs = substitute(h.lhs, {{"x", zero()}});
    REQUIRE(free_vars(h0_lhs).empty());

    const Q0Model q0;
    CHECK(eval(q0, h0_lhs, {}) == eval(q0, c.lhs, {}));
    const QiModel qi;
    CHECK(eval(qi, h0_lhs, {}) == eval(qi, c.lhs, {}));
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
      const FpModel fp{p};
      CHECK(eval(fp, h0_lhs, {}) == eval(fp, c.lhs, {}));
    }
  }
}

TEST_CASE("l_n(1) and h_n(0) agree semantically up to the 0 summand") {
  const Term l1 = substitute(l_n(1).lhs, {{"x1", var("x")}});
  const Term h0 = h_n(0).lhs;
  for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const FpModel fp{p};
    for (uint64_t v = 0; v < p; ++v) {
      const Assignment<FpModel> env{{"x", PrimeFieldElement(v, p)}};
      CHECK(eval(fp, l1, env) == eval(fp, h0, env));
    }
  }
}
