#include "doctest.h"
#include "gen.hpp"

using namespace llmfoc;
using testsupport::Gen;

TEST_CASE("dual base cases and the shift pair") {
  CHECK(eq(dual(mk_atom("a")), mk_natom("a")));
  // dual(a (x) ^b-) = a- par v b, the pair cut against each other later
  FormulaPtr f = mk_tensor(mk_atom("a"), mk_up(mk_natom("b")));
  FormulaPtr want = mk_par(mk_natom("a"), mk_down(mk_atom("b")));
  CHECK(eq(dual(f), want));
  CHECK(eq(dual(mk_up(mk_par(mk_natom("a"), mk_down(mk_atom("b"))))),
           mk_down(mk_tensor(mk_atom("a"), mk_up(mk_natom("b"))))));
}

TEST_CASE("dual is an involution and flips polarity, fsize is stable") {
  Gen gen(1);
  for (int i = 0; i < 300; i++) {
    FormulaPtr f = gen.formula(1 + static_cast<int>(gen.pick(8)));
    CHECK(eq(dual(dual(f)), f));
    CHECK(is_positive(f) != is_positive(dual(f)));
    CHECK(fsize(dual(f)) == fsize(f));
  }
}

TEST_CASE("fsize counts every node, shifts included") {
  CHECK(fsize(mk_atom("a")) == 1);
  CHECK(fsize(mk_tensor(mk_atom("a"), mk_atom("b"))) == 3);
  CHECK(fsize(mk_up(mk_natom("b"))) == 2);
}

TEST_CASE("parse examples") {
  FormulaPtr f = parse_formula("(tensor (atom a) (up (natom b)))");
  CHECK(eq(f, mk_tensor(mk_atom("a"), mk_up(mk_natom("b")))));
  CHECK(eq(parse_formula("(par (natom a) (down (atom b)))"),
           mk_par(mk_natom("a"), mk_down(mk_atom("b")))));
  CHECK(eq(parse_formula("  ( quest one ) "), mk_quest(mk_one())));
}

TEST_CASE("parse rejects polarity violations with a position") {
  try {
    parse_formula("(tensor (natom a) one)");
    FAIL("expected a polarity error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col > 1);
    CHECK(std::string(e.what()).find("positive") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_formula("(bang one)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(atom 1bad)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(tensor (atom a)"), ParseError);
  CHECK_THROWS_AS(parse_formula("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_formula("(atom a) junk"), ParseError);
}

TEST_CASE("print examples") {
  CHECK(print_formula(mk_tensor(mk_atom("a"), mk_atom("b"))) ==
        "(tensor (atom a) (atom b))");
  CHECK(print_formula(mk_bot()) == "bot");
  CHECK(print_formula(mk_quest(mk_one())) == "(quest one)");
}

TEST_CASE("parse o print is the identity") {
  Gen gen(2);
  for (int i = 0; i < 500; i++) {
    FormulaPtr f = gen.formula(1 + static_cast<int>(gen.pick(9)));
    std::string text = print_formula(f);
    CHECK(eq(parse_formula(text), f));
    CHECK(print_formula(parse_formula(text)) == text);
  }
}

TEST_CASE("cmp is a total order compatible with equality") {
  Gen gen(3);
  for (int i = 0; i < 200; i++) {
    FormulaPtr x = gen.formula(4), y = gen.formula(4), z = gen.formula(4);
    CHECK(cmp(x, x) == 0);
    CHECK(cmp(x, y) == -cmp(y, x));
    if (cmp(x, y) < 0 && cmp(y, z) < 0) CHECK(cmp(x, z) < 0);
    if (cmp(x, y) == 0) CHECK(print_formula(x) == print_formula(y));
  }
}
