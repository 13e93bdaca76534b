#include "doctest.h"
#include "gen.hpp"

using namespace llmfoc;
using testsupport::Gen;

TEST_CASE("prove finds decide-then-ax") {
  Sequent s = mk_inv({}, {mk_natom("a"), mk_down(mk_atom("a"))});
  auto r = prove(s, 3);
  REQUIRE(r);
  CHECK(check(*r).ok);
  CHECK((*r)->rule == Rule::Decide);
  CHECK(dsize(*r) == 2);
}

TEST_CASE("a lone negative atom has no proof and search knows it exhausted") {
  Sequent s = mk_inv({}, {mk_natom("a")});
  SearchResult res = enumerate_proofs(s, SearchBudget{12, 10, 2});
  CHECK(res.proofs.empty());
  CHECK_FALSE(res.depth_hit);
}

TEST_CASE("the worked endsequent is provable at depth 8") {
  auto r = prove(testsupport::example1_endsequent(), 8);
  REQUIRE(r);
  CHECK(equal(*r, testsupport::example1()));
}

TEST_CASE("enumerate on an axiom sequent yields exactly the axiom") {
  Sequent s = mk_foc({}, Ctx{passive(mk_natom("a")), focus(mk_atom("a"))});
  SearchResult res = enumerate_proofs(s, SearchBudget{1, 100, 2});
  REQUIRE(res.proofs.size() == 1);
  CHECK(res.proofs[0]->rule == Rule::Ax);
}

TEST_CASE("enumerate finds the worked proof and its permuted variant") {
  SearchResult res =
      enumerate_proofs(testsupport::example1_endsequent(), SearchBudget{8, 10000, 2});
  DerivPtr ex = testsupport::example1();
  // permuted variant: the two tensor instances of the first phase swapped
  DerivPtr inner = build::tensor(build::ax({}, "b"), build::ax({}, "d"),
                                 mk_atom("b"), mk_atom("d"));
  DerivPtr rel = build::release(build::decide(inner, {mk_tensor(mk_atom("b"), mk_atom("d"))}, {}),
                                {mk_natom("b"), mk_natom("d")});
  DerivPtr x = build::tensor(build::ax({}, "a"), rel, mk_atom("a"), mk_up(mk_natom("b")));
  DerivPtr outer = build::tensor(build::ax({}, "c"), x, mk_atom("c"), mk_up(mk_natom("d")));
  DerivPtr permuted = build::decide(
      outer,
      {mk_tensor(mk_atom("a"), mk_up(mk_natom("b"))),
       mk_tensor(mk_atom("c"), mk_up(mk_natom("d")))},
      {});
  REQUIRE(check(permuted).ok);
  bool has_ex = false, has_perm = false;
  for (const auto& p : res.proofs) {
    if (equal(p, ex)) has_ex = true;
    if (equal(p, permuted)) has_perm = true;
  }
  CHECK(has_ex);
  CHECK(has_perm);
  CHECK(res.proofs.size() == 2);
}

TEST_CASE("ill-formed sequents are rejected") {
  Sequent s;
  s.focused = true;
  s.items = Ctx{passive(mk_natom("a")), passive(mk_natom("b"))};
  CHECK_THROWS_AS(enumerate_proofs(s, SearchBudget{3, 1, 2}), InvalidInput);
}

TEST_CASE("search is deterministic and every result checks") {
  Gen gen(31);
  for (int i = 0; i < 25; i++) {
    DerivPtr seed = gen.coin() ? gen.foc_proof(3) : gen.inv_proof(3);
    SearchBudget b{6, 50, 2};
    SearchResult r1 = enumerate_proofs(seed->concl, b);
    SearchResult r2 = enumerate_proofs(seed->concl, b);
    REQUIRE(r1.proofs.size() == r2.proofs.size());
    for (size_t k = 0; k < r1.proofs.size(); k++) {
      CHECK(equal(r1.proofs[k], r2.proofs[k]));
      CHECK(check(r1.proofs[k]).ok);
      CHECK(dheight(r1.proofs[k]) <= 6);
    }
    // prove returns the first enumerated proof
    auto first = prove(seed->concl, SearchBudget{6, 1, 2});
    if (!r1.proofs.empty()) {
      REQUIRE(first);
      CHECK(equal(*first, r1.proofs[0]));
    }
  }
}

TEST_CASE("copies enable proofs that need the persistent context") {
  // |- {a (x) a}: a-, a- closes only by copying the persistent tensor
  FormulaPtr p = mk_tensor(mk_atom("a"), mk_atom("a"));
  Formulas per{p};
  Sequent goal = mk_inv(per, {mk_natom("a"), mk_natom("a")});
  auto r = prove(goal, SearchBudget{6, 1, 2});
  REQUIRE(r);
  CHECK(check(*r).ok);
  CHECK((*r)->rule == Rule::Decide);
  CHECK(equal((*r)->data.copies, Formulas{p}));
}
