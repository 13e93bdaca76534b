#include "llmfoc/check.hpp"

#include <algorithm>

namespace llmfoc {

std::string to_string(const Violation& v) {
  return path_str(v.path) + " [" + rule_name(v.rule) + "] " + v.message;
}

namespace {

struct Recon {
  const Sequent& s;
  Rule rule;
  const RuleData& d;
  std::string* err;

  bool fail(const std::string& m) {
    *err = std::string(rule_name(rule)) + ": " + m;
    return false;
  }

  bool need_focused(bool f) {
    if (s.focused != f)
      return fail(f ? "conclusion must be a focused sequent"
                    : "conclusion must be an inversion sequent");
    return true;
  }

  bool ascending(const std::vector<size_t>& idx, size_t bound, const char* what) {
    size_t prev = 0;
    bool first = true;
    for (size_t i : idx) {
      if (i >= bound) return fail(std::string(what) + " index out of range");
      if (!first && i <= prev) return fail(std::string(what) + " indices must ascend");
      prev = i;
      first = false;
    }
    return true;
  }

  bool principal(Conn want, bool want_focus, FocItem* out) {
    if (!d.main) return fail("missing principal item");
    if (*d.main >= s.items.size()) return fail("principal index out of range");
    FocItem it = s.items[*d.main];
    if (it.focused != want_focus || it.f->conn != want)
      return fail("principal item has the wrong shape");
    *out = it;
    return true;
  }
};

Ctx without(const Ctx& items, size_t idx) {
  Ctx out = items;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(idx));
  return out;
}

void split(const Ctx& items, const std::vector<size_t>& left, Ctx* sel, Ctx* rest) {
  size_t j = 0;
  for (size_t i = 0; i < items.size(); i++) {
    if (j < left.size() && left[j] == i) {
      sel->push_back(items[i]);
      j++;
    } else {
      rest->push_back(items[i]);
    }
  }
}

Sequent foc_seq(const Formulas& per, Ctx items) {
  Sequent s;
  s.focused = true;
  s.per = per;
  s.items = sorted(std::move(items));
  return s;
}

Sequent inv_seq(const Formulas& per, Ctx items) {
  Sequent s;
  s.focused = false;
  s.per = per;
  s.items = sorted(std::move(items));
  return s;
}

}  // namespace

std::optional<std::vector<Sequent>> reconstruct_premises(const Sequent& s, Rule rule,
                                                         const RuleData& data,
                                                         Mode mode,
                                                         std::string* err) {
  Recon r{s, rule, data, err};
  std::vector<Sequent> out;
  switch (rule) {
    case Rule::Ax: {
      if (!r.need_focused(true)) return std::nullopt;
      if (s.items.size() != 2 || s.items[0].focused || !s.items[1].focused ||
          s.items[0].f->conn != Conn::NegAtom || s.items[1].f->conn != Conn::Atom)
        return r.fail("context must be a dual pair of atoms"), std::nullopt;
      if (s.items[0].f->atom != s.items[1].f->atom)
        return r.fail("atom mismatch"), std::nullopt;
      return out;
    }
    case Rule::One: {
      if (!r.need_focused(true)) return std::nullopt;
      if (s.items.size() != 1 || !s.items[0].focused || s.items[0].f->conn != Conn::One)
        return r.fail("context must be exactly the focus [1]"), std::nullopt;
      return out;
    }
    case Rule::Tensor: {
      if (!r.need_focused(true)) return std::nullopt;
      FocItem p;
      if (!r.principal(Conn::Tensor, true, &p)) return std::nullopt;
      Ctx rest = without(s.items, *data.main);
      if (!r.ascending(data.left, rest.size(), "left")) return std::nullopt;
      Ctx sel, other;
      split(rest, data.left, &sel, &other);
      sel.push_back(focus(p.f->left));
      other.push_back(focus(p.f->right));
      out.push_back(foc_seq(s.per, std::move(sel)));
      out.push_back(foc_seq(s.per, std::move(other)));
      return out;
    }
    case Rule::PlusL:
    case Rule::PlusR: {
      if (!r.need_focused(true)) return std::nullopt;
      FocItem p;
      if (!r.principal(Conn::Plus, true, &p)) return std::nullopt;
      Ctx rest = without(s.items, *data.main);
      rest.push_back(focus(rule == Rule::PlusL ? p.f->left : p.f->right));
      out.push_back(foc_seq(s.per, std::move(rest)));
      return out;
    }
    case Rule::Bang: {
      if (!r.need_focused(true)) return std::nullopt;
      if (s.items.size() != 1 || !s.items[0].focused || s.items[0].f->conn != Conn::Bang)
        return r.fail("context must be exactly the focus [!N]"), std::nullopt;
      out.push_back(inv_seq(s.per, Ctx{passive(s.items[0].f->left)}));
      return out;
    }
    case Rule::Release: {
      if (!r.need_focused(true)) return std::nullopt;
      Ctx prem;
      size_t delta = 0;
      for (const auto& it : s.items) {
        if (!it.focused) {
          prem.push_back(it);
        } else if (it.f->conn == Conn::Up) {
          prem.push_back(passive(it.f->left));
          delta++;
        } else {
          return r.fail("focus " + print_formula(it.f) + " is not an upshift"),
                 std::nullopt;
        }
      }
      if (delta == 0) return r.fail("Δ must be non-empty"), std::nullopt;
      out.push_back(inv_seq(s.per, std::move(prem)));
      return out;
    }
    case Rule::Bot: {
      if (!r.need_focused(false)) return std::nullopt;
      Ctx prem = s.items;
      if (!erase_one(prem, passive(mk_bot())))
        return r.fail("context lacks ⊥"), std::nullopt;
      out.push_back(inv_seq(s.per, std::move(prem)));
      return out;
    }
    case Rule::Par: {
      if (!r.need_focused(false)) return std::nullopt;
      FocItem p;
      if (!r.principal(Conn::Par, false, &p)) return std::nullopt;
      Ctx prem = without(s.items, *data.main);
      prem.push_back(passive(p.f->left));
      prem.push_back(passive(p.f->right));
      out.push_back(inv_seq(s.per, std::move(prem)));
      return out;
    }
    case Rule::Top: {
      if (!r.need_focused(false)) return std::nullopt;
      if (!contains(s.items, passive(mk_top())))
        return r.fail("context lacks ⊤"), std::nullopt;
      return out;
    }
    case Rule::With: {
      if (!r.need_focused(false)) return std::nullopt;
      FocItem p;
      if (!r.principal(Conn::With, false, &p)) return std::nullopt;
      Ctx rest = without(s.items, *data.main);
      Ctx lhs = rest, rhs = rest;
      lhs.push_back(passive(p.f->left));
      rhs.push_back(passive(p.f->right));
      out.push_back(inv_seq(s.per, std::move(lhs)));
      out.push_back(inv_seq(s.per, std::move(rhs)));
      return out;
    }
    case Rule::Quest: {
      if (!r.need_focused(false)) return std::nullopt;
      FocItem p;
      if (!r.principal(Conn::Quest, false, &p)) return std::nullopt;
      Formulas per = s.per;
      insert_one(per, p.f->left);
      out.push_back(inv_seq(per, without(s.items, *data.main)));
      return out;
    }
    case Rule::Decide: {
      if (!r.need_focused(false)) return std::nullopt;
      if (!r.ascending(data.theta, s.items.size(), "theta")) return std::nullopt;
      if (data.copies.empty() && data.theta.empty())
        return r.fail("Per^{vec n} or Θ must be non-empty"), std::nullopt;
      for (const auto& c : data.copies) {
        if (!is_positive(c)) return r.fail("copies must be positive"), std::nullopt;
        if (!contains(s.per, c))
          return r.fail("copy " + print_formula(c) + " does not occur in Per"),
                 std::nullopt;
      }
      Ctx prem;
      size_t j = 0;
      for (size_t i = 0; i < s.items.size(); i++) {
        if (j < data.theta.size() && data.theta[j] == i) {
          if (s.items[i].focused || s.items[i].f->conn != Conn::Down)
            return r.fail("theta index does not name a ⇓-formula"), std::nullopt;
          prem.push_back(focus(s.items[i].f->left));
          j++;
        } else {
          prem.push_back(s.items[i]);
        }
      }
      for (const auto& c : data.copies) prem.push_back(focus(c));
      out.push_back(foc_seq(s.per, std::move(prem)));
      return out;
    }
    case Rule::Cut:
    case Rule::Fcut: {
      if (!data.cut_formula || !is_positive(data.cut_formula))
        return r.fail("missing or non-positive cut formula"), std::nullopt;
      if (rule == Rule::Fcut && !r.need_focused(true)) return std::nullopt;
      if (!r.ascending(data.left, s.items.size(), "left")) return std::nullopt;
      Ctx sel, rest;
      split(s.items, data.left, &sel, &rest);
      if (rule == Rule::Cut) {
        for (const auto& it : rest)
          if (it.focused)
            return r.fail("every focus must go to the first premise"), std::nullopt;
      }
      sel.push_back(focus(data.cut_formula));
      out.push_back(foc_seq(s.per, std::move(sel)));
      Ctx second = rest;
      second.push_back(passive(dual(data.cut_formula)));
      if (rule == Rule::Cut)
        out.push_back(inv_seq(s.per, std::move(second)));
      else
        out.push_back(foc_seq(s.per, std::move(second)));
      return out;
    }
    case Rule::CutBang:
    case Rule::FcutBang: {
      if (!data.cut_formula || !is_positive(data.cut_formula))
        return r.fail("missing or non-positive cut formula"), std::nullopt;
      if (!r.need_focused(rule == Rule::FcutBang)) return std::nullopt;
      out.push_back(inv_seq(s.per, Ctx{passive(dual(data.cut_formula))}));
      Formulas per = s.per;
      insert_one(per, data.cut_formula);
      Sequent second;
      second.focused = s.focused;
      second.per = per;
      second.items = s.items;
      out.push_back(second);
      return out;
    }
    case Rule::Acut: {
      if (mode != Mode::Experimental)
        return r.fail("only admitted in experimental mode"), std::nullopt;
      if (!r.need_focused(true)) return std::nullopt;
      if (!data.cut_formula || !is_positive(data.cut_formula))
        return r.fail("missing or non-positive cut formula"), std::nullopt;
      Ctx base = merged(sorted(data.acut_psi), as_passives(data.acut_gamma));
      Ctx removed = diff(base, s.items);
      Ctx added = diff(s.items, base);
      bool ok = base.size() == s.items.size() && removed.size() == added.size();
      if (ok) {
        Ctx expect;
        for (const auto& it : removed) {
          if (it.focused || it.f->conn != Conn::Down) {
            ok = false;
            break;
          }
          expect.push_back(focus(it.f->left));
        }
        ok = ok && equal(sorted(std::move(expect)), added);
      }
      if (!ok)
        return r.fail("conclusion is not an activation of psi + gamma"), std::nullopt;
      Ctx first = sorted(data.acut_psi);
      first.push_back(focus(data.cut_formula));
      out.push_back(foc_seq(s.per, std::move(first)));
      Ctx second = as_passives(data.acut_gamma);
      second.push_back(passive(dual(data.cut_formula)));
      out.push_back(inv_seq(s.per, std::move(second)));
      return out;
    }
  }
  return r.fail("unknown rule"), std::nullopt;
}

namespace {

void check_rec(const DerivPtr& d, Mode mode, Path& path, ValidityReport& rep) {
  auto violation = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back({path, d->rule, msg});
  };
  std::string wf = well_formed_error(d->concl);
  if (!wf.empty()) violation(wf);
  if (d->prems.size() != rule_arity(d->rule)) {
    violation("wrong premise count");
  } else {
    std::string err;
    auto prems = reconstruct_premises(d->concl, d->rule, d->data, mode, &err);
    if (!prems) {
      violation(err);
    } else {
      for (size_t i = 0; i < prems->size(); i++) {
        if (!equal((*prems)[i], d->prems[i]->concl))
          violation("premise " + std::to_string(i) + " concludes " +
                    print_sequent(d->prems[i]->concl) + " but the rule requires " +
                    print_sequent((*prems)[i]));
      }
    }
  }
  for (size_t i = 0; i < d->prems.size(); i++) {
    path.push_back(i);
    check_rec(d->prems[i], mode, path, rep);
    path.pop_back();
  }
}

}  // namespace

ValidityReport check(const DerivPtr& d, Mode mode) {
  ValidityReport rep;
  Path path;
  check_rec(d, mode, path, rep);
  return rep;
}

}  // namespace llmfoc
