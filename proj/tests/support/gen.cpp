#include "gen.hpp"

#include <algorithm>

namespace testsupport {

FormulaPtr A() { return mk_atom("a"); }
FormulaPtr B() { return mk_atom("b"); }
FormulaPtr C() { return mk_atom("c"); }
FormulaPtr D() { return mk_atom("d"); }

namespace {

FormulaPtr tens_up(const FormulaPtr& x, const FormulaPtr& y) {
  return mk_tensor(x, mk_up(dual(y)));
}

}  // namespace

DerivPtr example1() {
  // inner phase: b (x) d
  DerivPtr inner = build::tensor(build::ax({}, "b"), build::ax({}, "d"), B(), D());
  DerivPtr dec2 = build::decide(inner, {mk_tensor(B(), D())}, {});
  DerivPtr rel = build::release(dec2, {mk_natom("b"), mk_natom("d")});
  // outer phase: a (x) ^b- and c (x) ^d- together
  DerivPtr t2 = build::tensor(build::ax({}, "c"), rel, C(), mk_up(mk_natom("d")));
  DerivPtr t1 = build::tensor(build::ax({}, "a"), t2, A(), mk_up(mk_natom("b")));
  return build::decide(t1, {tens_up(A(), B()), tens_up(C(), D())}, {});
}

Sequent example1_endsequent() { return example1()->concl; }

DerivPtr example1_upper() { return example1()->prems[0]; }

DerivPtr badcut_left() {
  // identity expansion for v(a (x) ^b-), with an extra [^bot] focus
  DerivPtr axb = build::ax({}, "b");
  DerivPtr dec_b = build::decide(axb, {B()}, {});
  DerivPtr rel_b = build::release(dec_b, {mk_natom("b")});
  DerivPtr t = build::tensor(build::ax({}, "a"), rel_b, A(), mk_up(mk_natom("b")));
  DerivPtr dec = build::decide(t, {tens_up(A(), B())}, {});
  DerivPtr p = build::par(dec, mk_natom("a"), mk_down(B()));
  DerivPtr bo = build::bot(p);
  return build::release(bo, {mk_bot(), mk_par(mk_natom("a"), mk_down(B()))});
}

DerivPtr badcut() {
  FormulaPtr cutf = mk_up(mk_par(mk_natom("a"), mk_down(B())));
  return build::cut(cutf, badcut_left(), example1());
}

Gen::Gen(std::uint64_t seed, int n_atoms) : rng(seed) {
  const char* names[] = {"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < n_atoms && i < 6; i++) atoms.push_back(names[i]);
}

size_t Gen::pick(size_t n) {
  return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

bool Gen::coin(double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

FormulaPtr Gen::pos(int size) {
  if (size <= 1) {
    switch (pick(3)) {
      case 0: return mk_atom(atoms[pick(atoms.size())]);
      case 1: return mk_one();
      default: return mk_atom(atoms[pick(atoms.size())]);
    }
  }
  switch (pick(6)) {
    case 0: return mk_tensor(pos(size / 2), pos(size / 2));
    case 1: return mk_plus(pos(size / 2), pos(size / 2));
    case 2: return mk_bang(neg(size - 1));
    case 3: return mk_up(neg(size - 1));
    case 4: return mk_atom(atoms[pick(atoms.size())]);
    default: return mk_one();
  }
}

FormulaPtr Gen::neg(int size) {
  if (size <= 1) {
    switch (pick(3)) {
      case 0: return mk_natom(atoms[pick(atoms.size())]);
      case 1: return mk_bot();
      default: return mk_top();
    }
  }
  switch (pick(6)) {
    case 0: return mk_par(neg(size / 2), neg(size / 2));
    case 1: return mk_with(neg(size / 2), neg(size / 2));
    case 2: return mk_quest(pos(size - 1));
    case 3: return mk_down(pos(size - 1));
    case 4: return mk_natom(atoms[pick(atoms.size())]);
    default: return mk_bot();
  }
}

FormulaPtr Gen::formula(int size) { return coin() ? pos(size) : neg(size); }

FocItem Gen::item(int size) {
  return coin(0.35) ? focus(pos(size)) : passive(neg(size));
}

Ctx Gen::context(size_t max_items, int size) {
  Ctx out;
  size_t n = pick(max_items + 1);
  for (size_t i = 0; i < n; i++) out.push_back(item(size));
  return sorted(std::move(out));
}

DerivPtr Gen::foc_proof(int depth) {
  if (depth <= 1) {
    return coin(0.8) ? build::ax({}, atoms[pick(atoms.size())]) : build::one({});
  }
  switch (pick(7)) {
    case 0: {  // tensor of two subproofs on a focus each
      DerivPtr d1 = foc_proof(depth - 1);
      DerivPtr d2 = foc_proof(depth - 1);
      if (!equal(d1->concl.per, d2->concl.per)) return foc_proof(depth - 1);
      Formulas f1 = foci_of(d1->concl.items), f2 = foci_of(d2->concl.items);
      return build::tensor(d1, d2, f1[pick(f1.size())], f2[pick(f2.size())]);
    }
    case 1: {
      DerivPtr d1 = foc_proof(depth - 1);
      Formulas f1 = foci_of(d1->concl.items);
      FormulaPtr a = f1[pick(f1.size())];
      return coin() ? build::plusL(d1, a, pos(2)) : build::plusR(d1, pos(2), a);
    }
    case 2: {  // promotion over a top axiom
      return build::bang(build::top({}, {mk_top()}), mk_top());
    }
    case 3: {  // release over an inversion proof
      DerivPtr e = inv_proof(depth - 1);
      if (e->concl.items.empty()) return foc_proof(depth - 1);
      Formulas ctx;
      for (const auto& it : e->concl.items) ctx.push_back(it.f);
      Formulas delta;
      size_t take = 1 + pick(std::min<size_t>(ctx.size(), 2));
      for (size_t i = 0; i < take; i++) delta.push_back(ctx[pick(ctx.size())]);
      delta = sorted(std::move(delta));
      if (!submultiset(delta, sorted(ctx))) delta.resize(1);
      return build::release(e, delta);
    }
    default:
      return depth > 2 && coin(0.3) ? foc_proof(depth - 1)
             : coin(0.8) ? build::ax({}, atoms[pick(atoms.size())])
                         : build::one({});
  }
}

DerivPtr Gen::inv_proof(int depth) {
  if (depth <= 1) {
    Formulas ctx{mk_top()};
    size_t extra = pick(3);
    for (size_t i = 0; i < extra; i++) ctx.push_back(neg(2));
    return build::top({}, ctx);
  }
  switch (pick(6)) {
    case 0:
      return build::bot(inv_proof(depth - 1));
    case 1: {  // par of two context members
      DerivPtr e = inv_proof(depth - 1);
      if (e->concl.items.size() < 2) return build::bot(e);
      size_t i = pick(e->concl.items.size());
      size_t j = pick(e->concl.items.size());
      if (i == j) j = (j + 1) % e->concl.items.size();
      return build::par(e, e->concl.items[i].f, e->concl.items[j].f);
    }
    case 2: {  // with against a matching top axiom
      DerivPtr e = inv_proof(depth - 1);
      if (e->concl.items.empty()) return e;
      FormulaPtr n = e->concl.items[pick(e->concl.items.size())].f;
      Ctx rest = e->concl.items;
      erase_one(rest, passive(n));
      Formulas ctx2;
      for (const auto& it : rest) ctx2.push_back(it.f);
      ctx2.push_back(mk_top());
      DerivPtr e2 = build::top(e->concl.per, ctx2);
      return build::with(e, e2, n, mk_top());
    }
    case 3: {  // store a positive into the persistent context
      DerivPtr e = inv_proof(depth - 1);
      FormulaPtr p = pos(2);
      return build::quest(weaken_per(e, {p}), p);
    }
    case 4: {  // decide downward from a focused proof
      DerivPtr f = foc_proof(depth - 1);
      Formulas foci = foci_of(f->concl.items);
      Formulas theta, copies;
      for (const auto& x : foci)
        (coin(0.75) ? theta : copies).push_back(x);
      if (theta.empty() && copies.empty()) return inv_proof(depth - 1);
      theta = sorted(std::move(theta));
      copies = sorted(std::move(copies));
      if (!copies.empty()) f = weaken_per(f, copies);
      return build::decide(f, theta, copies);
    }
    default: {
      Formulas ctx{mk_top(), neg(3)};
      return build::top({}, ctx);
    }
  }
}

std::vector<DerivPtr> search_corpus(Gen& gen, size_t want_foc, int depth) {
  std::vector<DerivPtr> out;
  size_t guard = 0;
  while (out.size() < want_foc && guard++ < want_foc * 60) {
    DerivPtr seed = gen.coin() ? gen.foc_proof(2 + static_cast<int>(gen.pick(4)))
                               : gen.inv_proof(2 + static_cast<int>(gen.pick(3)));
    if (!seed->concl.focused) continue;
    if (dheight(seed) > depth) continue;
    SearchBudget budget;
    budget.depth = depth;
    budget.limit = 3;
    SearchResult res = enumerate_proofs(seed->concl, budget);
    for (const auto& p : res.proofs)
      if (out.size() < want_foc) out.push_back(p);
  }
  return out;
}

namespace {

// Positives Q with both |- .: {dual Q} provable and a copy-exercising proof
// at per = {Q} available.
Formulas bang_cut_formulas() {
  Formulas out;
  out.push_back(mk_up(mk_bot()));
  out.push_back(mk_up(mk_par(mk_bot(), mk_bot())));
  return out;
}

DerivPtr prove_dual_singleton(const FormulaPtr& q) {
  Sequent goal = mk_inv({}, Formulas{dual(q)});
  auto r = prove(goal, SearchBudget{8, 1, 2});
  if (!r) throw Error("cut corpus: no proof of the dual singleton");
  return *r;
}

// |- {q}: {top} using one copy of q (q must be an upshift).
DerivPtr copy_user(const FormulaPtr& q) {
  Formulas per{q};
  DerivPtr t = build::top(per, {mk_top(), q->left});
  DerivPtr rel = build::release(t, {q->left});
  return build::decide(rel, {}, {q});
}

}  // namespace

std::vector<CutInstance> cut_corpus(Gen& gen, size_t want) {
  std::vector<CutInstance> out;
  // Persistent cuts first so every kind is represented.
  for (const auto& q : bang_cut_formulas()) {
    DerivPtr dq = prove_dual_singleton(q);
    out.push_back({build::cut_bang(q, dq, copy_user(q)), Rule::CutBang});
    DerivPtr e_plain = build::top(Formulas{q}, {mk_top()});
    out.push_back({build::cut_bang(q, dq, e_plain), Rule::CutBang});
    DerivPtr e_foc = weaken_per(build::ax({}, "a"), {q});
    out.push_back({build::fcut_bang(q, dq, e_foc), Rule::FcutBang});
    DerivPtr e_foc2 = weaken_per(example1_upper(), {q});
    out.push_back({build::fcut_bang(q, dq, e_foc2), Rule::FcutBang});
  }
  size_t guard = 0;
  while (out.size() < want && guard++ < want * 80) {
    DerivPtr d = gen.foc_proof(2 + static_cast<int>(gen.pick(4)));
    if (!equal(d->concl.per, Formulas{})) continue;
    Formulas foci = foci_of(d->concl.items);
    FormulaPtr p = foci[gen.pick(foci.size())];
    FormulaPtr pd = dual(p);
    if (gen.coin()) {
      // linear cut against an inversion proof of gamma, dual(p)
      DerivPtr e;
      if (gen.coin(0.3)) {
        auto r = prove(mk_inv({}, Formulas{pd, mk_down(p)}), SearchBudget{9, 1, 2});
        e = r ? *r : build::top({}, {pd, mk_top()});
      } else {
        e = build::top({}, {pd, mk_top()});
      }
      out.push_back({build::cut(p, d, e), Rule::Cut});
    } else {
      // fcut against a focused proof holding dual(p) passively
      DerivPtr e0 = build::top({}, {pd, mk_top()});
      DerivPtr e = build::release(e0, {mk_top()});
      out.push_back({build::fcut(p, d, e), Rule::Fcut});
    }
  }
  return out;
}

}  // namespace testsupport
