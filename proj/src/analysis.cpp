#include "llmfoc/analysis.hpp"

#include <algorithm>

namespace llmfoc {

namespace {

UFormulaPtr unode(UConn c, std::string atom, UFormulaPtr l, UFormulaPtr r) {
  return std::make_shared<UFormula>(
      UFormula{c, std::move(atom), std::move(l), std::move(r)});
}

}  // namespace

int cmp(const UFormulaPtr& a, const UFormulaPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->conn != b->conn)
    return static_cast<int>(a->conn) < static_cast<int>(b->conn) ? -1 : 1;
  if (a->left) {
    if (int c = cmp(a->left, b->left)) return c;
    if (a->right)
      if (int c = cmp(a->right, b->right)) return c;
  }
  return a->atom.compare(b->atom) < 0 ? -1 : (a->atom == b->atom ? 0 : 1);
}

int ufsize(const UFormulaPtr& f) {
  int n = 1;
  if (f->left) n += ufsize(f->left);
  if (f->right) n += ufsize(f->right);
  return n;
}

std::string print_uformula(const UFormulaPtr& f) {
  switch (f->conn) {
    case UConn::Atom: return "(atom " + f->atom + ")";
    case UConn::NegAtom: return "(natom " + f->atom + ")";
    case UConn::One: return "one";
    case UConn::Bot: return "bot";
    case UConn::Zero: return "zero";
    case UConn::Top: return "top";
    case UConn::Tensor:
      return "(tensor " + print_uformula(f->left) + " " + print_uformula(f->right) + ")";
    case UConn::Par:
      return "(par " + print_uformula(f->left) + " " + print_uformula(f->right) + ")";
    case UConn::Plus:
      return "(plus " + print_uformula(f->left) + " " + print_uformula(f->right) + ")";
    case UConn::With:
      return "(with " + print_uformula(f->left) + " " + print_uformula(f->right) + ")";
    case UConn::Bang: return "(bang " + print_uformula(f->left) + ")";
    case UConn::Quest: return "(quest " + print_uformula(f->left) + ")";
  }
  return "?";
}

UFormulaPtr unegate(const UFormulaPtr& f) {
  switch (f->conn) {
    case UConn::Atom: return unode(UConn::NegAtom, f->atom, nullptr, nullptr);
    case UConn::NegAtom: return unode(UConn::Atom, f->atom, nullptr, nullptr);
    case UConn::One: return unode(UConn::Bot, "", nullptr, nullptr);
    case UConn::Bot: return unode(UConn::One, "", nullptr, nullptr);
    case UConn::Zero: return unode(UConn::Top, "", nullptr, nullptr);
    case UConn::Top: return unode(UConn::Zero, "", nullptr, nullptr);
    case UConn::Tensor: return unode(UConn::Par, "", unegate(f->left), unegate(f->right));
    case UConn::Par: return unode(UConn::Tensor, "", unegate(f->left), unegate(f->right));
    case UConn::Plus: return unode(UConn::With, "", unegate(f->left), unegate(f->right));
    case UConn::With: return unode(UConn::Plus, "", unegate(f->left), unegate(f->right));
    case UConn::Bang: return unode(UConn::Quest, "", unegate(f->left), nullptr);
    case UConn::Quest: return unode(UConn::Bang, "", unegate(f->left), nullptr);
  }
  throw Error("unegate: bad connective");
}

UFormulaPtr erase_formula(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom: return unode(UConn::Atom, f->atom, nullptr, nullptr);
    case Conn::NegAtom: return unode(UConn::NegAtom, f->atom, nullptr, nullptr);
    case Conn::One: return unode(UConn::One, "", nullptr, nullptr);
    case Conn::Bot: return unode(UConn::Bot, "", nullptr, nullptr);
    case Conn::Zero: return unode(UConn::Zero, "", nullptr, nullptr);
    case Conn::Top: return unode(UConn::Top, "", nullptr, nullptr);
    case Conn::Tensor:
      return unode(UConn::Tensor, "", erase_formula(f->left), erase_formula(f->right));
    case Conn::Par:
      return unode(UConn::Par, "", erase_formula(f->left), erase_formula(f->right));
    case Conn::Plus:
      return unode(UConn::Plus, "", erase_formula(f->left), erase_formula(f->right));
    case Conn::With:
      return unode(UConn::With, "", erase_formula(f->left), erase_formula(f->right));
    case Conn::Bang: return unode(UConn::Bang, "", erase_formula(f->left), nullptr);
    case Conn::Quest: return unode(UConn::Quest, "", erase_formula(f->left), nullptr);
    case Conn::Up:
    case Conn::Down:
      return erase_formula(f->left);
  }
  throw Error("erase_formula: bad connective");
}

namespace {
bool ult(const UFormulaPtr& a, const UFormulaPtr& b) { return cmp(a, b) < 0; }

bool uerase_one(UFormulas& fs, const UFormulaPtr& f) {
  auto pos = std::lower_bound(fs.begin(), fs.end(), f, ult);
  if (pos == fs.end() || cmp(*pos, f) != 0) return false;
  fs.erase(pos);
  return true;
}

void uinsert(UFormulas& fs, const UFormulaPtr& f) {
  fs.insert(std::upper_bound(fs.begin(), fs.end(), f, ult), f);
}

bool uequal(const UFormulas& a, const UFormulas& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); i++)
    if (!eq(a[i], b[i])) return false;
  return true;
}

bool ucontains(const UFormulas& fs, const UFormulaPtr& f) {
  auto pos = std::lower_bound(fs.begin(), fs.end(), f, ult);
  return pos != fs.end() && cmp(*pos, f) == 0;
}
}  // namespace

UFormulas usorted(UFormulas fs) {
  std::sort(fs.begin(), fs.end(), ult);
  return fs;
}

const char* urule_name(URule r) {
  switch (r) {
    case URule::Ax: return "ax";
    case URule::One: return "one";
    case URule::Tensor: return "tensor";
    case URule::Bot: return "bot";
    case URule::Par: return "par";
    case URule::Top: return "top";
    case URule::With: return "with";
    case URule::Plus1: return "plus1";
    case URule::Plus2: return "plus2";
    case URule::Bang: return "bang";
    case URule::Quest: return "quest";
    case URule::Copy: return "copy";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Dyadic checking. Every rule is verified locally against the stored premise
// sequents.

namespace {

void ucheck_rec(const UDerivPtr& d, Path& path, UReport& rep) {
  auto fail = [&](const std::string& m) {
    rep.ok = false;
    rep.violations.push_back(path_str(path) + " [" + urule_name(d->rule) + "] " + m);
  };
  auto same_per = [&](const UDerivPtr& p) {
    if (!uequal(d->per, p->per)) fail("premise persistent context differs");
  };
  size_t arity;
  switch (d->rule) {
    case URule::Ax:
    case URule::One:
    case URule::Top: arity = 0; break;
    case URule::Tensor:
    case URule::With: arity = 2; break;
    default: arity = 1;
  }
  if (d->prems.size() != arity) {
    fail("wrong premise count");
    return;
  }
  switch (d->rule) {
    case URule::Ax: {
      if (d->ctx.size() != 2 || d->ctx[0]->conn != UConn::Atom ||
          d->ctx[1]->conn != UConn::NegAtom || d->ctx[0]->atom != d->ctx[1]->atom)
        fail("context must be a dual pair of atoms");
      break;
    }
    case URule::One: {
      if (d->ctx.size() != 1 || d->ctx[0]->conn != UConn::One)
        fail("context must be exactly 1");
      break;
    }
    case URule::Top: {
      if (!ucontains(d->ctx, unode(UConn::Top, "", nullptr, nullptr)))
        fail("context lacks top");
      break;
    }
    case URule::Tensor: {
      const UDerivPtr &p1 = d->prems[0], &p2 = d->prems[1];
      same_per(p1);
      same_per(p2);
      if (!d->principal || d->principal->conn != UConn::Tensor) {
        fail("principal must be a tensor");
        break;
      }
      UFormulas g1 = p1->ctx, g2 = p2->ctx;
      if (!uerase_one(g1, d->principal->left) || !uerase_one(g2, d->principal->right)) {
        fail("premises lack the tensor components");
        break;
      }
      UFormulas want = g1;
      for (const auto& f : g2) uinsert(want, f);
      uinsert(want, d->principal);
      if (!uequal(want, d->ctx)) fail("context split mismatch");
      break;
    }
    case URule::Bot: {
      same_per(d->prems[0]);
      UFormulas want = d->prems[0]->ctx;
      uinsert(want, unode(UConn::Bot, "", nullptr, nullptr));
      if (!uequal(want, d->ctx)) fail("conclusion must add exactly one bot");
      break;
    }
    case URule::Par: {
      same_per(d->prems[0]);
      if (!d->principal || d->principal->conn != UConn::Par) {
        fail("principal must be a par");
        break;
      }
      UFormulas want = d->prems[0]->ctx;
      if (!uerase_one(want, d->principal->left) ||
          !uerase_one(want, d->principal->right)) {
        fail("premise lacks the par components");
        break;
      }
      uinsert(want, d->principal);
      if (!uequal(want, d->ctx)) fail("context mismatch");
      break;
    }
    case URule::With: {
      const UDerivPtr &p1 = d->prems[0], &p2 = d->prems[1];
      same_per(p1);
      same_per(p2);
      if (!d->principal || d->principal->conn != UConn::With) {
        fail("principal must be a with");
        break;
      }
      UFormulas g1 = p1->ctx, g2 = p2->ctx;
      if (!uerase_one(g1, d->principal->left) || !uerase_one(g2, d->principal->right)) {
        fail("premises lack the with components");
        break;
      }
      if (!uequal(g1, g2)) {
        fail("premise contexts differ beyond the components");
        break;
      }
      uinsert(g1, d->principal);
      if (!uequal(g1, d->ctx)) fail("context mismatch");
      break;
    }
    case URule::Plus1:
    case URule::Plus2: {
      same_per(d->prems[0]);
      if (!d->principal || d->principal->conn != UConn::Plus) {
        fail("principal must be a plus");
        break;
      }
      UFormulas want = d->prems[0]->ctx;
      if (!uerase_one(want, d->rule == URule::Plus1 ? d->principal->left
                                                    : d->principal->right)) {
        fail("premise lacks the plus component");
        break;
      }
      uinsert(want, d->principal);
      if (!uequal(want, d->ctx)) fail("context mismatch");
      break;
    }
    case URule::Bang: {
      same_per(d->prems[0]);
      if (!d->principal || d->principal->conn != UConn::Bang) {
        fail("principal must be a bang");
        break;
      }
      if (d->ctx.size() != 1 || !eq(d->ctx[0], d->principal) ||
          d->prems[0]->ctx.size() != 1 ||
          !eq(d->prems[0]->ctx[0], d->principal->left))
        fail("promotion needs a bare boxed formula over its body");
      break;
    }
    case URule::Quest: {
      if (!d->principal || d->principal->conn != UConn::Quest) {
        fail("principal must be a quest");
        break;
      }
      UFormulas per = d->per;
      uinsert(per, d->principal->left);
      if (!uequal(per, d->prems[0]->per)) {
        fail("premise must store the formula in the persistent context");
        break;
      }
      UFormulas want = d->prems[0]->ctx;
      uinsert(want, d->principal);
      if (!uequal(want, d->ctx)) fail("context mismatch");
      break;
    }
    case URule::Copy: {
      same_per(d->prems[0]);
      if (!d->principal) {
        fail("copy needs its formula");
        break;
      }
      if (!ucontains(d->per, d->principal)) {
        fail("copied formula not in the persistent context");
        break;
      }
      UFormulas want = d->prems[0]->ctx;
      if (!uerase_one(want, d->principal)) {
        fail("premise lacks the copied formula");
        break;
      }
      if (!uequal(want, d->ctx)) fail("context mismatch");
      break;
    }
  }
  for (size_t i = 0; i < d->prems.size(); i++) {
    path.push_back(i);
    ucheck_rec(d->prems[i], path, rep);
    path.pop_back();
  }
}

}  // namespace

UReport check_dyadic(const UDerivPtr& d) {
  UReport rep;
  Path path;
  ucheck_rec(d, path, rep);
  return rep;
}

namespace {

void print_udyadic_rec(std::string& out, const UDerivPtr& d, int indent) {
  out.append(static_cast<size_t>(indent), ' ');
  out += '(';
  out += urule_name(d->rule);
  out += " (per";
  for (const auto& f : d->per) {
    out += ' ';
    out += print_uformula(f);
  }
  out += ") (ctx";
  for (const auto& f : d->ctx) {
    out += ' ';
    out += print_uformula(f);
  }
  out += ')';
  for (const auto& p : d->prems) {
    out += '\n';
    print_udyadic_rec(out, p, indent + 2);
  }
  out += ')';
}

}  // namespace

std::string print_udyadic(const UDerivPtr& d) {
  std::string out;
  print_udyadic_rec(out, d, 0);
  out += '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Erasure of derivations

namespace {

UFormulas erase_per(const Formulas& per) {
  UFormulas out;
  for (const auto& p : per) out.push_back(erase_formula(p));
  return usorted(std::move(out));
}

UFormulas erase_ctx(const Ctx& items) {
  UFormulas out;
  for (const auto& it : items) out.push_back(erase_formula(it.f));
  return usorted(std::move(out));
}

UDerivPtr umk(URule r, UFormulas per, UFormulas ctx, UFormulaPtr principal,
              std::vector<UDerivPtr> prems) {
  return std::make_shared<UDeriv>(UDeriv{r, std::move(per), std::move(ctx),
                                         std::move(principal), std::move(prems)});
}

UDerivPtr erase_rec(const DerivPtr& d) {
  UFormulas per = erase_per(d->concl.per);
  UFormulas ctx = erase_ctx(d->concl.items);
  switch (d->rule) {
    case Rule::Ax:
      return umk(URule::Ax, std::move(per), std::move(ctx), nullptr, {});
    case Rule::One:
      return umk(URule::One, std::move(per), std::move(ctx), nullptr, {});
    case Rule::Top:
      return umk(URule::Top, std::move(per), std::move(ctx), nullptr, {});
    case Rule::Tensor:
      return umk(URule::Tensor, std::move(per), std::move(ctx),
                 erase_formula(d->concl.items[*d->data.main].f),
                 {erase_rec(d->prems[0]), erase_rec(d->prems[1])});
    case Rule::PlusL:
    case Rule::PlusR:
      return umk(d->rule == Rule::PlusL ? URule::Plus1 : URule::Plus2,
                 std::move(per), std::move(ctx),
                 erase_formula(d->concl.items[*d->data.main].f),
                 {erase_rec(d->prems[0])});
    case Rule::Bang:
      return umk(URule::Bang, std::move(per), std::move(ctx),
                 erase_formula(d->concl.items[0].f), {erase_rec(d->prems[0])});
    case Rule::Bot:
      return umk(URule::Bot, std::move(per), std::move(ctx), nullptr,
                 {erase_rec(d->prems[0])});
    case Rule::Par:
    case Rule::With:
    case Rule::Quest:
      return umk(d->rule == Rule::Par    ? URule::Par
                 : d->rule == Rule::With ? URule::With
                                         : URule::Quest,
                 std::move(per), std::move(ctx),
                 erase_formula(d->concl.items[*d->data.main].f),
                 d->rule == Rule::With
                     ? std::vector<UDerivPtr>{erase_rec(d->prems[0]),
                                              erase_rec(d->prems[1])}
                     : std::vector<UDerivPtr>{erase_rec(d->prems[0])});
    case Rule::Release:
      // Shift erasure makes premise and conclusion identical.
      return erase_rec(d->prems[0]);
    case Rule::Decide: {
      // Focusing theta is bookkeeping after erasure; copies duplicate.
      UDerivPtr cur = erase_rec(d->prems[0]);
      for (const auto& c : d->data.copies) {
        UFormulaPtr uc = erase_formula(c);
        UFormulas cctx = cur->ctx;
        if (!uerase_one(cctx, uc))
          throw InvalidInput("erase: copy missing above a decide");
        cur = umk(URule::Copy, erase_per(d->concl.per), std::move(cctx), uc, {cur});
      }
      return cur;
    }
    default:
      throw InvalidInput("erase_derivation: input must be cut-free");
  }
}

}  // namespace

UDerivPtr erase_derivation(const DerivPtr& d) {
  if (!is_cut_free(d)) throw InvalidInput("erase_derivation: input must be cut-free");
  ValidityReport rep = check(d, Mode::Strict);
  if (!rep.ok)
    throw InvalidInput("erase_derivation: input fails check: " +
                       to_string(rep.violations.front()));
  return erase_rec(d);
}

// ---------------------------------------------------------------------------
// Phases

namespace {

size_t phase_extent(const DerivPtr& d) {
  // Counts focused nodes from a phase's first node down to and including the
  // releases (or focused leaves) that end it.
  if (!d->concl.focused) return 0;
  size_t n = 1;
  if (d->rule == Rule::Release || d->rule == Rule::Bang) return n;
  for (const auto& p : d->prems) n += phase_extent(p);
  return n;
}

void phases_rec(const DerivPtr& d, Path& path, std::vector<Phase>& out) {
  if (d->rule == Rule::Decide) {
    Phase ph;
    ph.decide_path = path;
    Formulas theta;
    for (size_t i : d->data.theta) theta.push_back(d->concl.items[i].f->left);
    ph.foci = merged(sorted(std::move(theta)), d->data.copies);
    ph.node_count = phase_extent(d->prems[0]);
    out.push_back(std::move(ph));
  }
  for (size_t i = 0; i < d->prems.size(); i++) {
    path.push_back(i);
    phases_rec(d->prems[i], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Phase> phases(const DerivPtr& d) {
  ValidityReport rep = check(d, Mode::Experimental);
  if (!rep.ok)
    throw InvalidInput("phases: input fails check: " + to_string(rep.violations.front()));
  std::vector<Phase> out;
  Path path;
  phases_rec(d, path, out);
  return out;
}

// ---------------------------------------------------------------------------
// Maximality

bool MaximalityReport::all_maximal() const {
  for (const auto& e : entries)
    if (e.status != MaximalityStatus::Maximal) return false;
  return true;
}

namespace {

void maximal_rec(const DerivPtr& d, int depth, Path& path, MaximalityReport& out) {
  if (d->rule == Rule::Decide) {
    MaximalityEntry entry;
    entry.decide_path = path;
    const Sequent& prem = d->prems[0]->concl;

    // Candidate extra foci: distinct unselected downshift occurrences in the
    // premise, plus one more copy of any distinct persistent formula.
    Formulas down_cands, copy_cands;
    for (const auto& it : prem.items)
      if (!it.focused && it.f->conn == Conn::Down)
        if (!contains(down_cands, it.f->left)) insert_one(down_cands, it.f->left);
    for (const auto& c : d->concl.per)
      if (!contains(copy_cands, c)) insert_one(copy_cands, c);

    bool exhausted = false;
    auto attempt = [&](const FormulaPtr& extra, bool is_down) -> bool {
      Ctx ext = prem.items;
      if (is_down) {
        if (!erase_one(ext, passive(mk_down(extra)))) return false;
      }
      insert_one(ext, focus(extra));
      Sequent goal = mk_foc(prem.per, std::move(ext));
      SearchBudget budget;
      budget.depth = depth;
      budget.limit = 1;
      SearchResult res = enumerate_proofs(goal, budget);
      if (!res.proofs.empty()) {
        entry.status = MaximalityStatus::Extendable;
        entry.witness_formula = extra;
        entry.witness_proof = res.proofs.front();
        return true;
      }
      if (res.depth_hit) exhausted = true;
      return false;
    };

    bool found = false;
    for (const auto& c : down_cands)
      if ((found = attempt(c, true))) break;
    if (!found)
      for (const auto& c : copy_cands)
        if ((found = attempt(c, false))) break;
    if (!found)
      entry.status =
          exhausted ? MaximalityStatus::DepthExhausted : MaximalityStatus::Maximal;
    out.entries.push_back(std::move(entry));
  }
  for (size_t i = 0; i < d->prems.size(); i++) {
    path.push_back(i);
    maximal_rec(d->prems[i], depth, path, out);
    path.pop_back();
  }
}

}  // namespace

MaximalityReport check_maximal(const DerivPtr& d, int depth) {
  if (!is_cut_free(d)) throw InvalidInput("check_maximal: input must be cut-free");
  ValidityReport rep = check(d, Mode::Strict);
  if (!rep.ok)
    throw InvalidInput("check_maximal: input fails check: " +
                       to_string(rep.violations.front()));
  MaximalityReport out;
  Path path;
  maximal_rec(d, depth, path, out);
  return out;
}

std::string maximality_line(const MaximalityEntry& e) {
  std::string out = "decide@" + path_str(e.decide_path) + ": ";
  switch (e.status) {
    case MaximalityStatus::Maximal: out += "maximal"; break;
    case MaximalityStatus::Extendable:
      out += "extendable(" + print_formula(e.witness_formula) + ")";
      break;
    case MaximalityStatus::DepthExhausted: out += "depth-exhausted"; break;
  }
  return out;
}

}  // namespace llmfoc
