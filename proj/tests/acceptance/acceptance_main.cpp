// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything runs at desk scale with fixed seeds.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "gen.hpp"
#include "llmfoc/proof_io.hpp"

using namespace llmfoc;
using testsupport::CutInstance;
using testsupport::Gen;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::cout << "criterion " << number << " (" << name << "): "
            << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) failures++;
}

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> run;
};

// 1. The worked multifocused proof checks, erases soundly, and has two
//    phases with focus counts (2, 1).
bool golden_validity(std::string& detail) {
  DerivPtr d = testsupport::example1();
  ValidityReport rep = check(d);
  if (!rep.ok) {
    detail = "proof does not check";
    return false;
  }
  UReport urep = check_dyadic(erase_derivation(d));
  if (!urep.ok) {
    detail = "erasure fails the dyadic checker";
    return false;
  }
  auto ps = phases(d);
  if (ps.size() != 2 || ps[0].foci.size() != 2 || ps[1].foci.size() != 1) {
    detail = "expected 2 phases with focus counts (2,1)";
    return false;
  }
  detail = "checked, erased, phases (2,1)";
  return true;
}

// 2. Side conditions are rejected with their exact clause names and accepted
//    once met.
bool side_conditions(std::string& detail) {
  auto raw = [](Rule r, Sequent concl, RuleData data, std::vector<DerivPtr> prems) {
    return std::make_shared<Deriv>(
        Deriv{r, std::move(concl), std::move(data), std::move(prems)});
  };
  auto has = [](const ValidityReport& rep, const char* needle) {
    for (const auto& v : rep.violations)
      if (v.message.find(needle) != std::string::npos) return true;
    return false;
  };
  Sequent rel_concl;
  rel_concl.focused = true;
  rel_concl.items = Ctx{passive(mk_natom("a"))};
  ValidityReport r1 =
      check(raw(Rule::Release, rel_concl, {}, {build::top({}, {mk_top()})}));
  if (r1.ok || !has(r1, "release: Δ must be non-empty")) {
    detail = "release clause missing";
    return false;
  }
  Sequent dec_concl = mk_inv({}, {mk_natom("a"), mk_down(mk_atom("a"))});
  ValidityReport r2 = check(raw(Rule::Decide, dec_concl, {}, {build::ax({}, "a")}));
  if (r2.ok || !has(r2, "decide: Per^{vec n} or Θ must be non-empty")) {
    detail = "decide clause missing";
    return false;
  }
  DerivPtr rel_ok =
      build::release(build::top({}, {mk_top(), mk_natom("a")}), {mk_natom("a")});
  DerivPtr dec_ok = build::decide(build::ax({}, "a"), {mk_atom("a")}, {});
  if (!check(rel_ok).ok || !check(dec_ok).ok) {
    detail = "satisfied side conditions rejected";
    return false;
  }
  detail = "exact clauses reported, satisfied instances accepted";
  return true;
}

// 3. Decomposition exactness over search-generated focused derivations.
bool decomposition_exactness(std::string& detail) {
  Gen gen(1003);
  std::vector<DerivPtr> corpus = testsupport::search_corpus(gen, 200, 7);
  if (corpus.size() < 200) {
    detail = "only " + std::to_string(corpus.size()) + " derivations";
    return false;
  }
  size_t foci_checked = 0;
  for (const auto& d : corpus) {
    for (size_t i = 0; i < d->concl.items.size(); i++) {
      if (!d->concl.items[i].focused) continue;
      DecompResult r = decompose(d, i);
      if (!is_spent(r.sigma)) {
        detail = "sigma not spent";
        return false;
      }
      if (dsize(r.core) + static_cast<int>(r.suffix.steps()) != dsize(d)) {
        detail = "size identity violated";
        return false;
      }
      if (!check(r.core).ok) {
        detail = "core fails check";
        return false;
      }
      // replay over two distinct extensions
      for (bool extra : {false, true}) {
        Formulas inv_ctx = merged(lower_ctx(r.sigma), Formulas{mk_top()});
        if (extra) inv_ctx = merged(inv_ctx, Formulas{mk_top()});
        Formulas delta{mk_top()};
        for (const auto& it : r.sigma)
          if (it.focused) delta.push_back(it.f->left);
        DerivPtr e = build::release(build::top(d->concl.per, inv_ctx),
                                    sorted(std::move(delta)));
        DerivPtr replayed = r.suffix.replay(e);
        if (!check(replayed).ok) {
          detail = "replayed suffix fails check";
          return false;
        }
        Ctx want = d->concl.items;
        erase_one(want, focus(d->concl.items[i].f));
        insert_one(want, focus(mk_up(mk_top())));
        if (extra) insert_one(want, passive(mk_top()));
        if (!equal(replayed->concl.items, want)) {
          detail = "replayed conclusion mismatch";
          return false;
        }
      }
      foci_checked++;
    }
  }
  detail = std::to_string(corpus.size()) + " derivations, " +
           std::to_string(foci_checked) + " focus choices, identity exact";
  return foci_checked > 0;
}

// 4. Lowering preserves the rule skeleton node for node.
bool lowering_strength(std::string& detail) {
  Gen gen(1004);
  std::function<std::string(const DerivPtr&)> skel = [&](const DerivPtr& d) {
    std::string out = rule_name(d->rule);
    out += '(';
    for (const auto& p : d->prems) out += skel(p);
    out += ')';
    return out;
  };
  size_t done = 0, guard = 0;
  while (done < 200 && guard++ < 30000) {
    DerivPtr d = gen.foc_proof(2 + static_cast<int>(gen.pick(4)));
    for (size_t i = 0; i < d->concl.items.size() && done < 200; i++) {
      if (!d->concl.items[i].focused) continue;
      Ctx rest = d->concl.items;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (!is_spent(rest)) continue;
      DerivPtr low = lower_deriv(d, i);
      if (skel(low) != skel(d)) {
        detail = "skeleton changed";
        return false;
      }
      if (!check(low).ok) {
        detail = "lowered derivation fails check";
        return false;
      }
      done++;
    }
  }
  if (done < 200) {
    detail = "only " + std::to_string(done) + " spent instances";
    return false;
  }
  detail = std::to_string(done) + " lowered derivations, skeletons identical";
  return true;
}

// 5. Cut elimination over randomly composed instances of all four kinds.
bool cut_elimination(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  Gen gen(1005);
  std::vector<CutInstance> corpus = testsupport::cut_corpus(gen, 200);
  if (corpus.size() < 200) {
    detail = "only " + std::to_string(corpus.size()) + " instances";
    return false;
  }
  size_t kinds[4] = {0, 0, 0, 0};
  size_t coercions = 0;
  for (const auto& inst : corpus) {
    switch (inst.kind) {
      case Rule::Cut: kinds[0]++; break;
      case Rule::Fcut: kinds[1]++; break;
      case Rule::CutBang: kinds[2]++; break;
      default: kinds[3]++;
    }
    NormalizeResult r = normalize(inst.node);
    if (!is_cut_free(r.result)) {
      detail = "result not cut-free";
      return false;
    }
    if (!check(r.result).ok) {
      detail = "result fails check";
      return false;
    }
    if (!equal(r.result->concl, inst.node->concl)) {
      detail = "conclusion changed";
      return false;
    }
    for (const auto& s : r.trace.steps) {
      coercions += s.coercions;
      if (s.spawned > 0 && !(s.after < s.before)) {
        detail = "a step did not decrease the measure";
        return false;
      }
    }
  }
  if (!kinds[0] || !kinds[1] || !kinds[2] || !kinds[3]) {
    detail = "a cut kind is missing from the corpus";
    return false;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::ostringstream os;
  os << corpus.size() << " cuts (cut/fcut/cut!/fcut! = " << kinds[0] << "/"
     << kinds[1] << "/" << kinds[2] << "/" << kinds[3] << "), " << coercions
     << " inversion-judgment residues logged, " << ms << " ms";
  detail = os.str();
  return ms < 60000;
}

// 6. The bad-cut scenario: elimination succeeds, the input proofs are
//    maximal, the output is not.
bool badcut_scenario(std::string& detail) {
  DerivPtr node = testsupport::badcut();
  if (!check(node).ok) {
    detail = "composed cut fails check";
    return false;
  }
  ReduceOptions opts;
  opts.paranoid = true;
  NormalizeResult r = normalize(node, opts);
  if (!is_cut_free(r.result) || !check(r.result).ok ||
      !equal(r.result->concl, node->concl)) {
    detail = "elimination failed";
    return false;
  }
  if (!check_maximal(testsupport::example1(), 10).all_maximal()) {
    detail = "the worked proof should be maximal";
    return false;
  }
  if (!check_maximal(testsupport::badcut_left(), 10).all_maximal()) {
    detail = "the identity expansion should be maximal";
    return false;
  }
  MaximalityReport rep = check_maximal(r.result, 10);
  bool extendable = false;
  for (const auto& e : rep.entries)
    extendable = extendable || e.status == MaximalityStatus::Extendable;
  if (!extendable) {
    detail = "no extendable decide in the eliminated proof";
    return false;
  }
  detail = "eliminated in " + std::to_string(r.trace.steps.size()) +
           " steps; inputs maximal, output extendable";
  return true;
}

// 7. Every cut-free proof produced above erases to a valid dyadic proof.
bool erasure_soundness(std::string& detail) {
  Gen gen(1007);
  size_t checked = 0;
  std::vector<DerivPtr> corpus = testsupport::search_corpus(gen, 120, 7);
  std::vector<CutInstance> cuts = testsupport::cut_corpus(gen, 120);
  std::vector<DerivPtr> all = corpus;
  for (const auto& inst : cuts) {
    all.push_back(inst.node->prems[0]);
    all.push_back(inst.node->prems[1]);
    all.push_back(normalize(inst.node).result);
  }
  all.push_back(normalize(testsupport::badcut()).result);
  for (const auto& d : all) {
    if (!is_cut_free(d)) continue;
    UReport rep = check_dyadic(erase_derivation(d));
    if (!rep.ok) {
      detail = "a dyadic erasure failed: " + rep.violations.front();
      return false;
    }
    checked++;
  }
  detail = std::to_string(checked) + " erasures accepted";
  return checked > 300;
}

// 8. Activation/neutralisation duality and the 2^k cardinality.
bool activation_duality(std::string& detail) {
  Gen gen(1008);
  size_t total = 0;
  for (int i = 0; i < 500; i++) {
    Ctx c = gen.context(6, 4);
    size_t downs = 0;
    for (const auto& it : c)
      if (!it.focused && it.f->conn == Conn::Down) downs++;
    auto all = activations(c);
    if (all.size() != (static_cast<size_t>(1) << downs)) {
      detail = "cardinality mismatch";
      return false;
    }
    Formulas base = neutralise(c);
    for (const auto& xi : all) {
      if (!equal(neutralise(xi), base)) {
        detail = "activation changed the neutralisation";
        return false;
      }
      total++;
    }
  }
  detail = "500 contexts, " + std::to_string(total) + " activations";
  return true;
}

// 9. Byte-identical print/parse round trips.
bool format_roundtrip(std::string& detail) {
  Gen gen(1009);
  for (int i = 0; i < 1000; i++) {
    FormulaPtr f = gen.formula(1 + static_cast<int>(gen.pick(9)));
    std::string text = print_formula(f);
    if (print_formula(parse_formula(text)) != text) {
      detail = "formula round trip failed";
      return false;
    }
  }
  size_t proofs = 0;
  Gen pg(10091);
  for (int i = 0; i < 100; i++) {
    DerivPtr d = pg.coin() ? pg.foc_proof(4) : pg.inv_proof(4);
    std::string text = print_proof(d);
    DerivPtr back = parse_proof(text);
    if (!equal(back, d) || print_proof(back) != text) {
      detail = "proof round trip failed";
      return false;
    }
    proofs++;
  }
  detail = "1000 formulas + " + std::to_string(proofs) + " proofs byte-identical";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {1, "golden validity", golden_validity},
      {2, "side-condition suite", side_conditions},
      {3, "decomposition exactness", decomposition_exactness},
      {4, "lowering strength", lowering_strength},
      {5, "cut elimination", cut_elimination},
      {6, "bad-cut scenario", badcut_scenario},
      {7, "erasure soundness", erasure_soundness},
      {8, "activation duality", activation_duality},
      {9, "format round-trip", format_roundtrip},
  };
  for (auto& c : cs) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    report(c.number, c.name, ok, detail);
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
