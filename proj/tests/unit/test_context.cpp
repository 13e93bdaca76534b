#include "doctest.h"
#include "gen.hpp"

using namespace llmfoc;
using testsupport::Gen;

TEST_CASE("neutralise turns foci into downshifted passives") {
  Ctx c1{passive(mk_natom("a"))};
  CHECK(equal(neutralise(c1), Formulas{mk_natom("a")}));
  Ctx c2{focus(mk_atom("a"))};
  CHECK(equal(neutralise(c2), Formulas{mk_down(mk_atom("a"))}));
}

TEST_CASE("neutralise is idempotent through re-wrapping and keeps cardinality") {
  Gen gen(11);
  for (int i = 0; i < 200; i++) {
    Ctx c = gen.context(6, 4);
    Formulas n = neutralise(c);
    CHECK(n.size() == c.size());
    CHECK(equal(neutralise(as_passives(n)), n));
  }
}

TEST_CASE("lower_ctx inverts spent foci") {
  Ctx c1{passive(mk_natom("a"))};
  CHECK(equal(lower_ctx(c1), Formulas{mk_natom("a")}));
  Ctx c2{focus(mk_up(mk_natom("b"))),
         passive(mk_down(mk_tensor(mk_atom("b"), mk_atom("d"))))};
  CHECK(equal(lower_ctx(c2),
              Formulas{mk_natom("b"), mk_down(mk_tensor(mk_atom("b"), mk_atom("d")))}));
  Ctx bad{focus(mk_atom("a"))};
  CHECK_THROWS_AS(lower_ctx(bad), NotSpent);
}

TEST_CASE("lowering agrees with neutralising up to the shift wrapper") {
  Gen gen(12);
  for (int i = 0; i < 200; i++) {
    Ctx c = gen.context(5, 3);
    Ctx spent;
    for (const auto& it : c)
      spent.push_back(it.focused ? focus(mk_up(dual(it.f))) : it);
    spent = sorted(std::move(spent));
    REQUIRE(is_spent(spent));
    Formulas low = lower_ctx(spent);
    Formulas neu = neutralise(spent);
    CHECK(low.size() == spent.size());
    CHECK(neu.size() == low.size());
    // neutralised foci are exactly the lowered bodies wrapped as down(up(.))
    Formulas expect;
    for (const auto& it : spent)
      expect.push_back(it.focused ? mk_down(it.f) : it.f);
    CHECK(equal(neu, sorted(std::move(expect))));
  }
}

TEST_CASE("activations examples") {
  Ctx c1{passive(mk_down(mk_atom("a")))};
  auto r1 = activations(c1);
  REQUIRE(r1.size() == 2);
  CHECK(equal(r1[0], c1));
  CHECK(equal(r1[1], Ctx{focus(mk_atom("a"))}));

  Ctx c2{passive(mk_natom("a"))};
  auto r2 = activations(c2);
  REQUIRE(r2.size() == 1);
  CHECK(equal(r2[0], c2));

  Ctx c3{focus(mk_atom("a"))};
  auto r3 = activations(c3);
  REQUIRE(r3.size() == 1);
  CHECK(equal(r3[0], c3));
}

TEST_CASE("every activation neutralises to the same context") {
  Gen gen(13);
  for (int i = 0; i < 100; i++) {
    Ctx c = gen.context(5, 3);
    size_t downs = 0;
    for (const auto& it : c)
      if (!it.focused && it.f->conn == Conn::Down) downs++;
    auto all = activations(c);
    CHECK(all.size() == (static_cast<size_t>(1) << downs));
    Formulas base = neutralise(c);
    for (const auto& xi : all) CHECK(equal(neutralise(xi), base));
  }
}

TEST_CASE("sequent well-formedness") {
  CHECK(well_formed(mk_inv({}, {mk_natom("a")})));
  CHECK(well_formed(mk_foc({}, Ctx{focus(mk_atom("a"))})));
  CHECK_FALSE(well_formed(mk_foc({}, Ctx{passive(mk_natom("a"))})));
  Sequent s;
  s.focused = false;
  s.items = Ctx{focus(mk_atom("a"))};
  CHECK_FALSE(well_formed(s));
  Sequent t;
  t.focused = true;
  t.per = Formulas{mk_natom("a")};
  t.items = Ctx{focus(mk_atom("a"))};
  CHECK(well_formed_error(t).find("persistent") != std::string::npos);
}

TEST_CASE("sequent parse and print round-trip") {
  std::string text = "(foc (per (atom a)) (ctx (natom b) (focus (tensor (atom a) "
                     "(atom b)))))";
  Sequent s = parse_sequent(text);
  CHECK(s.focused);
  CHECK(print_sequent(parse_sequent(print_sequent(s))) == print_sequent(s));
  CHECK_THROWS_AS(parse_sequent("(inv (per) (ctx (focus (atom a))))"), ParseError);
}
