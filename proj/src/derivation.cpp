#include "llmfoc/derivation.hpp"

#include <algorithm>

namespace llmfoc {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::One: return "one";
    case Rule::Tensor: return "tensor";
    case Rule::PlusL: return "plusL";
    case Rule::PlusR: return "plusR";
    case Rule::Bang: return "bang";
    case Rule::Release: return "release";
    case Rule::Bot: return "bot";
    case Rule::Par: return "par";
    case Rule::Top: return "top";
    case Rule::With: return "with";
    case Rule::Quest: return "quest";
    case Rule::Decide: return "decide";
    case Rule::Cut: return "cut";
    case Rule::Fcut: return "fcut";
    case Rule::CutBang: return "cutBang";
    case Rule::FcutBang: return "fcutBang";
    case Rule::Acut: return "acut";
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  static const std::pair<const char*, Rule> table[] = {
      {"ax", Rule::Ax}, {"one", Rule::One}, {"tensor", Rule::Tensor},
      {"plusL", Rule::PlusL}, {"plusR", Rule::PlusR}, {"bang", Rule::Bang},
      {"release", Rule::Release}, {"bot", Rule::Bot}, {"par", Rule::Par},
      {"top", Rule::Top}, {"with", Rule::With}, {"quest", Rule::Quest},
      {"decide", Rule::Decide}, {"cut", Rule::Cut}, {"fcut", Rule::Fcut},
      {"cutBang", Rule::CutBang}, {"fcutBang", Rule::FcutBang}, {"acut", Rule::Acut},
  };
  for (const auto& [n, r] : table)
    if (name == n) return r;
  return std::nullopt;
}

size_t rule_arity(Rule r) {
  switch (r) {
    case Rule::Ax:
    case Rule::One:
    case Rule::Top:
      return 0;
    case Rule::Tensor:
    case Rule::With:
    case Rule::Cut:
    case Rule::Fcut:
    case Rule::CutBang:
    case Rule::FcutBang:
    case Rule::Acut:
      return 2;
    default:
      return 1;
  }
}

bool is_cut_rule(Rule r) {
  return r == Rule::Cut || r == Rule::Fcut || r == Rule::CutBang ||
         r == Rule::FcutBang || r == Rule::Acut;
}

int dsize(const DerivPtr& d) {
  int n = 1;
  for (const auto& p : d->prems) n += dsize(p);
  return n;
}

int dheight(const DerivPtr& d) {
  int h = 0;
  for (const auto& p : d->prems) h = std::max(h, dheight(p));
  return h + 1;
}

bool is_cut_free(const DerivPtr& d) {
  if (is_cut_rule(d->rule)) return false;
  for (const auto& p : d->prems)
    if (!is_cut_free(p)) return false;
  return true;
}

bool equal(const DerivPtr& a, const DerivPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->rule != b->rule || !equal(a->concl, b->concl)) return false;
  if (a->data.main != b->data.main || a->data.left != b->data.left ||
      a->data.theta != b->data.theta)
    return false;
  if (!equal(a->data.copies, b->data.copies)) return false;
  if (static_cast<bool>(a->data.cut_formula) != static_cast<bool>(b->data.cut_formula))
    return false;
  if (a->data.cut_formula && !eq(a->data.cut_formula, b->data.cut_formula)) return false;
  if (a->prems.size() != b->prems.size()) return false;
  for (size_t i = 0; i < a->prems.size(); i++)
    if (!equal(a->prems[i], b->prems[i])) return false;
  return true;
}

std::string path_str(const Path& p) {
  if (p.empty()) return "root";
  std::string out;
  for (size_t i = 0; i < p.size(); i++) {
    if (i) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

DerivPtr subtree_at(const DerivPtr& d, const Path& p) {
  DerivPtr cur = d;
  for (size_t i : p) {
    if (i >= cur->prems.size()) throw Error("path out of range");
    cur = cur->prems[i];
  }
  return cur;
}

DerivPtr replace_at(const DerivPtr& d, const Path& p, const DerivPtr& repl) {
  if (p.empty()) return repl;
  if (p[0] >= d->prems.size()) throw Error("path out of range");
  Deriv copy = *d;
  copy.prems[p[0]] = replace_at(d->prems[p[0]], Path(p.begin() + 1, p.end()), repl);
  return std::make_shared<Deriv>(std::move(copy));
}

namespace {

DerivPtr mk(Rule r, Sequent concl, RuleData data, std::vector<DerivPtr> prems) {
  std::string wf = well_formed_error(concl);
  if (!wf.empty())
    throw InvalidInput(std::string("build ") + rule_name(r) + ": " + wf);
  return std::make_shared<Deriv>(
      Deriv{r, std::move(concl), std::move(data), std::move(prems)});
}

[[noreturn]] void bad(Rule r, const std::string& msg) {
  throw InvalidInput(std::string("build ") + rule_name(r) + ": " + msg);
}

// Lowest indices in `whole` forming the submultiset `part`; both sorted.
std::vector<size_t> indices_of(Rule r, const Ctx& whole, const Ctx& part) {
  std::vector<size_t> out;
  size_t i = 0;
  for (const auto& it : part) {
    while (i < whole.size() && cmp(whole[i], it) < 0) i++;
    if (i >= whole.size() || cmp(whole[i], it) != 0)
      bad(r, "context split is not a submultiset of the conclusion");
    out.push_back(i++);
  }
  return out;
}

size_t first_index_of(Rule r, const Ctx& items, const FocItem& it) {
  for (size_t i = 0; i < items.size(); i++)
    if (eq(items[i], it)) return i;
  bad(r, "principal item missing from conclusion");
}

Ctx erase_at(Ctx items, size_t idx) {
  items.erase(items.begin() + static_cast<std::ptrdiff_t>(idx));
  return items;
}

void need_judgment(Rule r, const DerivPtr& d, bool focused, const char* which) {
  if (d->concl.focused != focused)
    bad(r, std::string(which) + " premise must be " + (focused ? "focused" : "unfocused"));
}

void need_same_per(Rule r, const DerivPtr& a, const DerivPtr& b) {
  if (!equal(a->concl.per, b->concl.per))
    bad(r, "premises disagree on the persistent context");
}

Ctx remove_focus(Rule r, const DerivPtr& d, const FormulaPtr& p, const char* which) {
  Ctx items = d->concl.items;
  if (!erase_one(items, focus(p)))
    bad(r, std::string(which) + " premise lacks the focus " + print_formula(p));
  return items;
}

}  // namespace

namespace build {

DerivPtr ax(Formulas per, const std::string& atom_name) {
  Ctx items{passive(mk_natom(atom_name)), focus(mk_atom(atom_name))};
  return mk(Rule::Ax, mk_foc(std::move(per), std::move(items)), RuleData{}, {});
}

DerivPtr one(Formulas per) {
  return mk(Rule::One, mk_foc(std::move(per), Ctx{focus(mk_one())}), RuleData{}, {});
}

DerivPtr tensor(const DerivPtr& d1, const DerivPtr& d2, const FormulaPtr& a,
                const FormulaPtr& b) {
  need_judgment(Rule::Tensor, d1, true, "first");
  need_judgment(Rule::Tensor, d2, true, "second");
  need_same_per(Rule::Tensor, d1, d2);
  Ctx psi = remove_focus(Rule::Tensor, d1, a, "first");
  Ctx xi = remove_focus(Rule::Tensor, d2, b, "second");
  FocItem principal = focus(mk_tensor(a, b));
  Ctx all = merged(psi, xi);
  insert_one(all, principal);
  RuleData data;
  data.main = first_index_of(Rule::Tensor, all, principal);
  data.left = indices_of(Rule::Tensor, erase_at(all, *data.main), psi);
  return mk(Rule::Tensor, mk_foc(d1->concl.per, std::move(all)), std::move(data),
            {d1, d2});
}

static DerivPtr plus_side(Rule r, const DerivPtr& d1, const FormulaPtr& a,
                          const FormulaPtr& b) {
  need_judgment(r, d1, true, "the");
  Ctx psi = remove_focus(r, d1, r == Rule::PlusL ? a : b, "the");
  FocItem principal = focus(mk_plus(a, b));
  Ctx all = psi;
  insert_one(all, principal);
  RuleData data;
  data.main = first_index_of(r, all, principal);
  return mk(r, mk_foc(d1->concl.per, std::move(all)), std::move(data), {d1});
}

DerivPtr plusL(const DerivPtr& d1, const FormulaPtr& a, const FormulaPtr& b) {
  return plus_side(Rule::PlusL, d1, a, b);
}

DerivPtr plusR(const DerivPtr& d1, const FormulaPtr& a, const FormulaPtr& b) {
  return plus_side(Rule::PlusR, d1, a, b);
}

DerivPtr bang(const DerivPtr& d1, const FormulaPtr& n) {
  need_judgment(Rule::Bang, d1, false, "the");
  if (d1->concl.items.size() != 1 || !eq(d1->concl.items[0].f, n))
    bad(Rule::Bang, "premise context must be exactly the boxed formula");
  return mk(Rule::Bang, mk_foc(d1->concl.per, Ctx{focus(mk_bang(n))}), RuleData{},
            {d1});
}

DerivPtr release(const DerivPtr& d1, const Formulas& delta) {
  need_judgment(Rule::Release, d1, false, "the");
  if (delta.empty()) bad(Rule::Release, "delta must be non-empty");
  Ctx items = d1->concl.items;
  for (const auto& n : sorted(delta)) {
    if (!erase_one(items, passive(n)))
      bad(Rule::Release, "delta is not part of the premise context");
    insert_one(items, focus(mk_up(n)));
  }
  return mk(Rule::Release, mk_foc(d1->concl.per, std::move(items)), RuleData{}, {d1});
}

DerivPtr bot(const DerivPtr& d1) {
  need_judgment(Rule::Bot, d1, false, "the");
  Ctx items = d1->concl.items;
  insert_one(items, passive(mk_bot()));
  Sequent s;
  s.focused = false;
  s.per = d1->concl.per;
  s.items = std::move(items);
  return mk(Rule::Bot, std::move(s), RuleData{}, {d1});
}

static DerivPtr inv_node(Rule r, const Formulas& per, Ctx items, RuleData data,
                         std::vector<DerivPtr> prems) {
  Sequent s;
  s.focused = false;
  s.per = per;
  s.items = sorted(std::move(items));
  return mk(r, std::move(s), std::move(data), std::move(prems));
}

DerivPtr par(const DerivPtr& d1, const FormulaPtr& n, const FormulaPtr& m) {
  need_judgment(Rule::Par, d1, false, "the");
  Ctx items = d1->concl.items;
  if (!erase_one(items, passive(n)) || !erase_one(items, passive(m)))
    bad(Rule::Par, "premise context lacks the par operands");
  FocItem principal = passive(mk_par(n, m));
  insert_one(items, principal);
  RuleData data;
  data.main = first_index_of(Rule::Par, items, principal);
  return inv_node(Rule::Par, d1->concl.per, std::move(items), std::move(data), {d1});
}

DerivPtr top(Formulas per, Formulas ctx) {
  Ctx items = as_passives(sorted(std::move(ctx)));
  if (!contains(items, passive(mk_top()))) bad(Rule::Top, "context must contain top");
  return inv_node(Rule::Top, sorted(std::move(per)), std::move(items), RuleData{}, {});
}

DerivPtr with(const DerivPtr& d1, const DerivPtr& d2, const FormulaPtr& n,
              const FormulaPtr& m) {
  need_judgment(Rule::With, d1, false, "first");
  need_judgment(Rule::With, d2, false, "second");
  need_same_per(Rule::With, d1, d2);
  Ctx g1 = d1->concl.items;
  Ctx g2 = d2->concl.items;
  if (!erase_one(g1, passive(n)) || !erase_one(g2, passive(m)))
    bad(Rule::With, "premises lack the with operands");
  if (!equal(g1, g2)) bad(Rule::With, "premise contexts differ beyond the operands");
  FocItem principal = passive(mk_with(n, m));
  insert_one(g1, principal);
  RuleData data;
  data.main = first_index_of(Rule::With, g1, principal);
  return inv_node(Rule::With, d1->concl.per, std::move(g1), std::move(data), {d1, d2});
}

DerivPtr quest(const DerivPtr& d1, const FormulaPtr& p) {
  need_judgment(Rule::Quest, d1, false, "the");
  Formulas per = d1->concl.per;
  if (!erase_one(per, p))
    bad(Rule::Quest, "premise persistent context lacks the stored formula");
  Ctx items = d1->concl.items;
  FocItem principal = passive(mk_quest(p));
  insert_one(items, principal);
  RuleData data;
  data.main = first_index_of(Rule::Quest, items, principal);
  return inv_node(Rule::Quest, per, std::move(items), std::move(data), {d1});
}

DerivPtr decide(const DerivPtr& d1, const Formulas& theta, const Formulas& copies) {
  need_judgment(Rule::Decide, d1, true, "the");
  Formulas want = merged(sorted(theta), sorted(copies));
  if (want.empty()) bad(Rule::Decide, "theta and copies are both empty");
  if (!equal(foci_of(d1->concl.items), want))
    bad(Rule::Decide, "premise foci must be exactly copies + theta");
  for (const auto& c : copies)
    if (!contains(d1->concl.per, c))
      bad(Rule::Decide, "copy " + print_formula(c) + " not in the persistent context");
  Ctx items = as_passives(passives_of(d1->concl.items));
  Ctx downs;
  for (const auto& t : sorted(theta)) downs.push_back(passive(mk_down(t)));
  downs = sorted(std::move(downs));
  Ctx all = merged(items, downs);
  RuleData data;
  data.copies = sorted(copies);
  data.theta = indices_of(Rule::Decide, all, downs);
  return inv_node(Rule::Decide, d1->concl.per, std::move(all), std::move(data), {d1});
}

DerivPtr cut(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2) {
  if (!is_positive(p)) bad(Rule::Cut, "cut formula must be positive");
  need_judgment(Rule::Cut, d1, true, "first");
  need_judgment(Rule::Cut, d2, false, "second");
  need_same_per(Rule::Cut, d1, d2);
  Ctx rest = remove_focus(Rule::Cut, d1, p, "first");
  Ctx gamma = d2->concl.items;
  if (!erase_one(gamma, passive(dual(p))))
    bad(Rule::Cut, "second premise lacks the dual of the cut formula");
  Ctx all = merged(rest, gamma);
  Sequent s;
  s.focused = focus_count(rest) > 0;  // focus-free residue: lowered form
  s.per = d1->concl.per;
  s.items = all;
  RuleData data;
  data.cut_formula = p;
  data.left = indices_of(Rule::Cut, all, rest);
  return mk(Rule::Cut, std::move(s), std::move(data), {d1, d2});
}

DerivPtr fcut(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2) {
  if (!is_positive(p)) bad(Rule::Fcut, "cut formula must be positive");
  need_judgment(Rule::Fcut, d1, true, "first");
  need_judgment(Rule::Fcut, d2, true, "second");
  need_same_per(Rule::Fcut, d1, d2);
  Ctx rest = remove_focus(Rule::Fcut, d1, p, "first");
  Ctx xi = d2->concl.items;
  if (!erase_one(xi, passive(dual(p))))
    bad(Rule::Fcut, "second premise lacks the dual of the cut formula");
  Ctx all = merged(rest, xi);
  RuleData data;
  data.cut_formula = p;
  data.left = indices_of(Rule::Fcut, all, rest);
  return mk(Rule::Fcut, mk_foc(d1->concl.per, std::move(all)), std::move(data),
            {d1, d2});
}

static void check_bang_premises(Rule r, const FormulaPtr& p, const DerivPtr& d1,
                                const DerivPtr& d2) {
  if (!is_positive(p)) bad(r, "cut formula must be positive");
  need_judgment(r, d1, false, "first");
  if (d1->concl.items.size() != 1 || !eq(d1->concl.items[0].f, dual(p)))
    bad(r, "first premise context must be exactly the dual of the cut formula");
  Formulas per = d1->concl.per;
  insert_one(per, p);
  if (!equal(per, d2->concl.per))
    bad(r, "second premise persistent context must extend the first by the cut formula");
}

DerivPtr cut_bang(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2) {
  check_bang_premises(Rule::CutBang, p, d1, d2);
  need_judgment(Rule::CutBang, d2, false, "second");
  RuleData data;
  data.cut_formula = p;
  return inv_node(Rule::CutBang, d1->concl.per, d2->concl.items, std::move(data),
                  {d1, d2});
}

DerivPtr fcut_bang(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2) {
  check_bang_premises(Rule::FcutBang, p, d1, d2);
  need_judgment(Rule::FcutBang, d2, true, "second");
  RuleData data;
  data.cut_formula = p;
  return mk(Rule::FcutBang, mk_foc(d1->concl.per, d2->concl.items), std::move(data),
            {d1, d2});
}

DerivPtr acut(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2,
              const Ctx& conclusion_items) {
  if (!is_positive(p)) bad(Rule::Acut, "cut formula must be positive");
  need_judgment(Rule::Acut, d1, true, "first");
  need_judgment(Rule::Acut, d2, false, "second");
  need_same_per(Rule::Acut, d1, d2);
  Ctx psi = remove_focus(Rule::Acut, d1, p, "first");
  Ctx gamma = d2->concl.items;
  if (!erase_one(gamma, passive(dual(p))))
    bad(Rule::Acut, "second premise lacks the dual of the cut formula");
  Ctx base = merged(psi, gamma);
  Ctx concl = sorted(conclusion_items);
  Ctx removed = diff(base, concl);
  Ctx added = diff(concl, base);
  if (base.size() != concl.size() || removed.size() != added.size())
    bad(Rule::Acut, "conclusion is not an activation of the premise contexts");
  Ctx expect;
  for (const auto& it : removed) {
    if (it.focused || it.f->conn != Conn::Down)
      bad(Rule::Acut, "conclusion is not an activation of the premise contexts");
    expect.push_back(focus(it.f->left));
  }
  if (!equal(sorted(std::move(expect)), added))
    bad(Rule::Acut, "conclusion is not an activation of the premise contexts");
  RuleData data;
  data.cut_formula = p;
  data.acut_psi = psi;
  Formulas g;
  for (const auto& it : gamma) g.push_back(it.f);
  data.acut_gamma = sorted(std::move(g));
  return mk(Rule::Acut, mk_foc(d1->concl.per, std::move(concl)), std::move(data),
            {d1, d2});
}

}  // namespace build

DerivPtr weaken_per(const DerivPtr& d, const Formulas& extra) {
  if (extra.empty()) return d;
  for (const auto& p : extra)
    if (!is_positive(p)) throw Error("weaken_per: extras must be positive");
  Deriv copy = *d;
  copy.concl.per = merged(copy.concl.per, sorted(extra));
  for (auto& prem : copy.prems) prem = weaken_per(prem, extra);
  return std::make_shared<Deriv>(std::move(copy));
}

}  // namespace llmfoc
