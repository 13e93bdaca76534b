#include "llmfoc/rewrite.hpp"

#include <algorithm>

namespace llmfoc {

size_t Frame::steps() const {
  return kind == Kind::Tensor ? 1 + static_cast<size_t>(dsize(captured)) : 1;
}

size_t OpenDerivation::steps() const {
  size_t n = 0;
  for (const auto& f : frames) n += f.steps();
  return n;
}

DerivPtr OpenDerivation::replay(const DerivPtr& d) const {
  DerivPtr cur = d;
  for (const auto& f : frames) {
    if (f.kind == Frame::Kind::Tensor) {
      cur = f.hole_left ? build::tensor(cur, f.captured, f.a, f.b)
                        : build::tensor(f.captured, cur, f.a, f.b);
    } else {
      cur = f.plus_left ? build::plusL(cur, f.a, f.b) : build::plusR(cur, f.a, f.b);
    }
  }
  return cur;
}

bool operator<(const CutMeasure& a, const CutMeasure& b) {
  if (a.formula_size != b.formula_size) return a.formula_size < b.formula_size;
  if (a.kind_rank != b.kind_rank) return a.kind_rank < b.kind_rank;
  return a.weight < b.weight;
}

bool operator==(const CutMeasure& a, const CutMeasure& b) {
  return a.formula_size == b.formula_size && a.kind_rank == b.kind_rank &&
         a.weight == b.weight;
}

std::string CutMeasure::str() const {
  return "(" + std::to_string(formula_size) + "," + std::to_string(kind_rank) + "," +
         std::to_string(weight) + ")";
}

CutMeasure measure_of(const DerivPtr& d) {
  if (!is_cut_rule(d->rule) || !d->data.cut_formula)
    throw InvalidInput("measure_of: not a cut node");
  CutMeasure m;
  m.formula_size = fsize(d->data.cut_formula);
  m.kind_rank = (d->rule == Rule::CutBang || d->rule == Rule::FcutBang) ? 1 : 0;
  m.weight = dsize(d->prems[0]) + dsize(d->prems[1]);
  return m;
}

std::string StepRecord::line() const {
  return "step=" + step + " path=" + path_str(path) + " measure=" + before.str() +
         " -> " + after.str();
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

const FocItem& principal_item(const DerivPtr& d) {
  if (!d->data.main || *d->data.main >= d->concl.items.size())
    throw EngineStuck("missing principal item on " + std::string(rule_name(d->rule)));
  return d->concl.items[*d->data.main];
}

DecompResult decompose_val(const DerivPtr& d, const FormulaPtr& p) {
  Ctx rest = d->concl.items;
  if (!erase_one(rest, focus(p)))
    throw InvalidInput("decompose: no focus " + print_formula(p) + " in conclusion");
  if (is_spent(rest)) return {d, OpenDerivation{}, rest};

  switch (d->rule) {
    case Rule::Tensor: {
      const FocItem& main = principal_item(d);
      FormulaPtr a = main.f->left, b = main.f->right;
      if (eq(main.f, p)) {
        DecompResult r1 = decompose_val(d->prems[0], a);
        DecompResult r2 = decompose_val(d->prems[1], b);
        DecompResult out;
        out.core = build::tensor(r1.core, r2.core, a, b);
        out.suffix.frames = r2.suffix.frames;
        out.suffix.frames.insert(out.suffix.frames.end(), r1.suffix.frames.begin(),
                                 r1.suffix.frames.end());
        out.sigma = merged(r1.sigma, r2.sigma);
        return out;
      }
      size_t in_first = count_of(d->prems[0]->concl.items, focus(p));
      if (eq(p, a) && in_first > 0) in_first--;
      DecompResult r;
      Frame fr;
      fr.kind = Frame::Kind::Tensor;
      fr.a = a;
      fr.b = b;
      if (in_first > 0) {
        r = decompose_val(d->prems[0], p);
        fr.hole_left = true;
        fr.captured = d->prems[1];
      } else {
        r = decompose_val(d->prems[1], p);
        fr.hole_left = false;
        fr.captured = d->prems[0];
      }
      r.suffix.frames.push_back(fr);
      return r;
    }
    case Rule::PlusL:
    case Rule::PlusR: {
      const FocItem& main = principal_item(d);
      FormulaPtr a = main.f->left, b = main.f->right;
      bool left_side = d->rule == Rule::PlusL;
      if (eq(main.f, p)) {
        DecompResult r = decompose_val(d->prems[0], left_side ? a : b);
        r.core = left_side ? build::plusL(r.core, a, b) : build::plusR(r.core, a, b);
        return r;
      }
      DecompResult r = decompose_val(d->prems[0], p);
      Frame fr;
      fr.kind = Frame::Kind::Plus;
      fr.plus_left = left_side;
      fr.a = a;
      fr.b = b;
      r.suffix.frames.push_back(fr);
      return r;
    }
    default:
      throw EngineStuck("decompose: rule " + std::string(rule_name(d->rule)) +
                        " cannot conclude an unspent context");
  }
}

DerivPtr lower_val(const DerivPtr& d, const FormulaPtr& p) {
  Ctx rest = d->concl.items;
  if (!erase_one(rest, focus(p)))
    throw InvalidInput("lower: no focus " + print_formula(p) + " in conclusion");
  if (!is_spent(rest)) throw NotSpent("lower: context around the focus is not spent");
  if (focus_count(rest) == 0) return d;

  switch (d->rule) {
    case Rule::Release: {
      if (p->conn != Conn::Up)
        throw EngineStuck("lower: release with a non-upshift designated focus");
      return build::release(d->prems[0], Formulas{p->left});
    }
    case Rule::Tensor: {
      const FocItem& main = principal_item(d);
      FormulaPtr a = main.f->left, b = main.f->right;
      return build::tensor(lower_val(d->prems[0], a), lower_val(d->prems[1], b), a, b);
    }
    case Rule::PlusL: {
      const FocItem& main = principal_item(d);
      return build::plusL(lower_val(d->prems[0], main.f->left), main.f->left,
                          main.f->right);
    }
    case Rule::PlusR: {
      const FocItem& main = principal_item(d);
      return build::plusR(lower_val(d->prems[0], main.f->right), main.f->left,
                          main.f->right);
    }
    default:
      throw EngineStuck("lower: rule " + std::string(rule_name(d->rule)) +
                        " cannot carry spent foci");
  }
}

void require_checked(const DerivPtr& d, const char* who) {
  ValidityReport rep = check(d, Mode::Experimental);
  if (!rep.ok)
    throw InvalidInput(std::string(who) + ": input fails check: " +
                       to_string(rep.violations.front()));
}

FormulaPtr focus_formula_at(const DerivPtr& d, size_t idx, const char* who) {
  if (!d->concl.focused)
    throw InvalidInput(std::string(who) + ": conclusion is not a focused sequent");
  if (idx >= d->concl.items.size() || !d->concl.items[idx].focused)
    throw InvalidInput(std::string(who) + ": index does not name a focus");
  return d->concl.items[idx].f;
}

}  // namespace

DecompResult decompose(const DerivPtr& d, size_t focus_index) {
  require_checked(d, "decompose");
  return decompose_val(d, focus_formula_at(d, focus_index, "decompose"));
}

DerivPtr lower_deriv(const DerivPtr& d, size_t focus_index) {
  require_checked(d, "lower");
  return lower_val(d, focus_formula_at(d, focus_index, "lower"));
}

// ---------------------------------------------------------------------------
// Cut reduction

namespace {

struct EngineCtx {
  std::vector<CutMeasure> spawned;
  size_t coercions = 0;

  DerivPtr record(DerivPtr n) {
    spawned.push_back(measure_of(n));
    if (n->rule == Rule::Cut && !n->concl.focused) coercions++;
    return n;
  }
  DerivPtr cut(const FormulaPtr& p, const DerivPtr& a, const DerivPtr& b) {
    return record(build::cut(p, a, b));
  }
  DerivPtr fcut(const FormulaPtr& p, const DerivPtr& a, const DerivPtr& b) {
    return record(build::fcut(p, a, b));
  }
  DerivPtr cut_bang(const FormulaPtr& p, const DerivPtr& a, const DerivPtr& b) {
    return record(build::cut_bang(p, a, b));
  }
  DerivPtr fcut_bang(const FormulaPtr& p, const DerivPtr& a, const DerivPtr& b) {
    return record(build::fcut_bang(p, a, b));
  }
};

Formulas ctx_formulas(const Ctx& items) {
  Formulas out;
  for (const auto& it : items) out.push_back(it.f);
  return sorted(std::move(out));
}

Formulas spent_bodies(const Ctx& sigma) {
  Formulas out;
  for (const auto& it : sigma)
    if (it.focused) out.push_back(it.f->left);
  return sorted(std::move(out));
}

bool principal_matches(const DerivPtr& e, const FormulaPtr& f) {
  return e->data.main && eq(e->concl.items[*e->data.main].f, f);
}

// Case analysis for a linear cut whose first premise d2 proves
// |= per: c, [p] with c focus-free; e proves |- per: gamma, dual(p).
// Returns a derivation of |- per: c, gamma.
DerivPtr lowered_cut_case(const FormulaPtr& p, const DerivPtr& d2, const DerivPtr& e,
                          EngineCtx& ec, std::string& name) {
  FormulaPtr pd = dual(p);

  // Principal pairs: the cut formula's introduction on the left meets its
  // dual's introduction on the right.
  switch (d2->rule) {
    case Rule::One:
      if (e->rule == Rule::Bot) {
        name = "principal-one";
        return e->prems[0];
      }
      break;
    case Rule::Tensor:
      if (e->rule == Rule::Par && principal_matches(e, pd)) {
        name = "principal-tensor";
        DerivPtr inner = ec.cut(p->left, d2->prems[0], e->prems[0]);
        return ec.cut(p->right, d2->prems[1], inner);
      }
      break;
    case Rule::PlusL:
      if (e->rule == Rule::With && principal_matches(e, pd)) {
        name = "principal-plus";
        return ec.cut(p->left, d2->prems[0], e->prems[0]);
      }
      break;
    case Rule::PlusR:
      if (e->rule == Rule::With && principal_matches(e, pd)) {
        name = "principal-plus";
        return ec.cut(p->right, d2->prems[0], e->prems[1]);
      }
      break;
    case Rule::Bang:
      if (e->rule == Rule::Quest && principal_matches(e, pd)) {
        name = "principal-bang";
        return ec.cut_bang(dual(p->left), d2->prems[0], e->prems[0]);
      }
      break;
    case Rule::Release: {
      FormulaPtr body_dual = dual(p->left);  // p = up N, dual(p) = down (dual N)
      if (e->rule == Rule::Decide) {
        Formulas theta;
        for (size_t i : e->data.theta) theta.push_back(e->concl.items[i].f->left);
        theta = sorted(std::move(theta));
        if (contains(theta, body_dual)) {
          name = "principal-shift";
          DerivPtr inner = ec.cut(body_dual, e->prems[0], d2->prems[0]);
          if (!inner->concl.focused) return inner;  // nothing left to decide
          Formulas theta2 = theta;
          erase_one(theta2, body_dual);
          return build::decide(inner, theta2, e->data.copies);
        }
      }
      break;
    }
    default:
      break;
  }

  // Commutative cases: permute the cut past the last rule of e.
  switch (e->rule) {
    case Rule::Bot:
      name = "commute-bot";
      return build::bot(ec.cut(p, d2, e->prems[0]));
    case Rule::Par: {
      name = "commute-par";
      const FocItem& m = e->concl.items[*e->data.main];
      return build::par(ec.cut(p, d2, e->prems[0]), m.f->left, m.f->right);
    }
    case Rule::Top: {
      name = "commute-top";
      Formulas ctx = ctx_formulas(d2->concl.items);
      erase_one(ctx, p);  // remove the focus entry
      Formulas gamma = ctx_formulas(e->concl.items);
      erase_one(gamma, pd);
      return build::top(d2->concl.per, merged(ctx, gamma));
    }
    case Rule::With: {
      name = "commute-with";
      const FocItem& m = e->concl.items[*e->data.main];
      DerivPtr s1 = ec.cut(p, d2, e->prems[0]);
      DerivPtr s2 = ec.cut(p, d2, e->prems[1]);
      return build::with(s1, s2, m.f->left, m.f->right);
    }
    case Rule::Quest: {
      name = "commute-quest";
      FormulaPtr q = e->concl.items[*e->data.main].f->left;
      return build::quest(ec.cut(p, weaken_per(d2, {q}), e->prems[0]), q);
    }
    case Rule::Decide: {
      name = "commute-decide";
      Formulas theta;
      for (size_t i : e->data.theta) theta.push_back(e->concl.items[i].f->left);
      DerivPtr s = ec.fcut(p, d2, e->prems[0]);
      return build::decide(s, sorted(std::move(theta)), e->data.copies);
    }
    default:
      throw EngineStuck("no reduction for cut against " +
                        std::string(rule_name(e->rule)));
  }
}

// fcut case analysis: core proves |= per: sigma, [p] with sigma spent;
// e proves |= per: xi, dual(p) with dual(p) passive. Returns |= per: sigma, xi.
DerivPtr fcut_case(const FormulaPtr& p, const DerivPtr& core, const Ctx& sigma,
                   const DerivPtr& e, EngineCtx& ec, std::string& name) {
  FormulaPtr pd = dual(p);
  switch (e->rule) {
    case Rule::Tensor: {
      name = "commute-tensor";
      const FocItem& m = principal_item(e);
      size_t in_first = count_of(e->prems[0]->concl.items, passive(pd));
      if (in_first > 0) {
        DerivPtr s = ec.fcut(p, core, e->prems[0]);
        return build::tensor(s, e->prems[1], m.f->left, m.f->right);
      }
      DerivPtr s = ec.fcut(p, core, e->prems[1]);
      return build::tensor(e->prems[0], s, m.f->left, m.f->right);
    }
    case Rule::PlusL: {
      name = "commute-plus";
      const FocItem& m = principal_item(e);
      return build::plusL(ec.fcut(p, core, e->prems[0]), m.f->left, m.f->right);
    }
    case Rule::PlusR: {
      name = "commute-plus";
      const FocItem& m = principal_item(e);
      return build::plusR(ec.fcut(p, core, e->prems[0]), m.f->left, m.f->right);
    }
    case Rule::Release: {
      // Phase boundary: lower the spent foci, cut at the inversion judgment,
      // then blur everything in a single release.
      name = "boundary-release";
      bool has_foci = focus_count(sigma) > 0;
      DerivPtr d2 = has_foci ? lower_val(core, p) : core;
      Formulas down = spent_bodies(sigma);
      Formulas delta;
      for (const auto& it : e->concl.items)
        if (it.focused) delta.push_back(it.f->left);
      DerivPtr inner = ec.cut(p, d2, e->prems[0]);
      return build::release(inner, merged(sorted(std::move(delta)), down));
    }
    default:
      throw EngineStuck("no reduction for fcut against " +
                        std::string(rule_name(e->rule)));
  }
}

// Persistent cuts commute through the second derivation; decide nodes that
// copy the cut formula spawn linear cuts against the first premise.
DerivPtr bang_cut_case(const FormulaPtr& q, const DerivPtr& d, const DerivPtr& e,
                       EngineCtx& ec, std::string& name) {
  const Formulas& per = d->concl.per;
  name = std::string("pcommute-") + rule_name(e->rule);
  switch (e->rule) {
    case Rule::Ax:
      return build::ax(per, e->concl.items[1].f->atom);
    case Rule::One:
      return build::one(per);
    case Rule::Top:
      return build::top(per, ctx_formulas(e->concl.items));
    case Rule::Bot:
      return build::bot(ec.cut_bang(q, d, e->prems[0]));
    case Rule::Par: {
      const FocItem& m = e->concl.items[*e->data.main];
      return build::par(ec.cut_bang(q, d, e->prems[0]), m.f->left, m.f->right);
    }
    case Rule::With: {
      const FocItem& m = e->concl.items[*e->data.main];
      DerivPtr s1 = ec.cut_bang(q, d, e->prems[0]);
      DerivPtr s2 = ec.cut_bang(q, d, e->prems[1]);
      return build::with(s1, s2, m.f->left, m.f->right);
    }
    case Rule::Quest: {
      FormulaPtr r = e->concl.items[*e->data.main].f->left;
      return build::quest(ec.cut_bang(q, weaken_per(d, {r}), e->prems[0]), r);
    }
    case Rule::Tensor: {
      const FocItem& m = principal_item(e);
      DerivPtr s1 = ec.fcut_bang(q, d, e->prems[0]);
      DerivPtr s2 = ec.fcut_bang(q, d, e->prems[1]);
      return build::tensor(s1, s2, m.f->left, m.f->right);
    }
    case Rule::PlusL: {
      const FocItem& m = principal_item(e);
      return build::plusL(ec.fcut_bang(q, d, e->prems[0]), m.f->left, m.f->right);
    }
    case Rule::PlusR: {
      const FocItem& m = principal_item(e);
      return build::plusR(ec.fcut_bang(q, d, e->prems[0]), m.f->left, m.f->right);
    }
    case Rule::Bang:
      return build::bang(ec.cut_bang(q, d, e->prems[0]), e->concl.items[0].f->left);
    case Rule::Release: {
      Formulas delta;
      for (const auto& it : e->concl.items)
        if (it.focused) delta.push_back(it.f->left);
      return build::release(ec.cut_bang(q, d, e->prems[0]), sorted(std::move(delta)));
    }
    case Rule::Decide: {
      Formulas theta;
      for (size_t i : e->data.theta) theta.push_back(e->concl.items[i].f->left);
      theta = sorted(std::move(theta));
      size_t k = count_of(e->data.copies, q);
      if (k == 0) {
        return build::decide(ec.fcut_bang(q, d, e->prems[0]), theta, e->data.copies);
      }
      name = "pcut-copies";
      DerivPtr cur = ec.fcut_bang(q, d, e->prems[0]);
      for (size_t i = 0; i < k; i++) cur = ec.cut(q, cur, d);
      Formulas copies2 = e->data.copies;
      for (size_t i = 0; i < k; i++) erase_one(copies2, q);
      if (!cur->concl.focused) {
        if (!theta.empty() || !copies2.empty())
          throw EngineStuck("pcut-copies: unfocused residue with pending foci");
        return cur;
      }
      return build::decide(cur, theta, copies2);
    }
    default:
      throw EngineStuck("no reduction for a persistent cut against " +
                        std::string(rule_name(e->rule)));
  }
}

ReduceStepResult reduce_step_impl(const DerivPtr& d, const ReduceOptions& opts) {
  if (!is_cut_rule(d->rule)) throw InvalidInput("reduce_step: root is not a cut");
  if (d->rule == Rule::Acut) throw InvalidInput("acut has no reduction cases");
  if (!is_cut_free(d->prems[0]) || !is_cut_free(d->prems[1]))
    throw InvalidInput("reduce_step: premises must be cut-free");
  if (!opts.flexible && d->rule == Rule::Cut && !d->concl.focused)
    throw IllFormedCut(
        "cut conclusion is not focus-viable; flexible mode delivers the inversion "
        "judgment instead");

  EngineCtx ec;
  std::string name;
  const FormulaPtr p = d->data.cut_formula;
  DerivPtr res;

  switch (d->rule) {
    case Rule::Cut: {
      const DerivPtr& d1 = d->prems[0];
      const DerivPtr& e = d->prems[1];
      if (p->conn == Conn::Atom) {
        if (d1->rule != Rule::Ax) throw EngineStuck("atomic cut against a non-axiom");
        name = "principal-atom";
        res = e;
        break;
      }
      DecompResult dec = decompose_val(d1, p);
      bool has_foci = focus_count(dec.sigma) > 0;
      DerivPtr core = has_foci ? lower_val(dec.core, p) : dec.core;
      res = lowered_cut_case(p, core, e, ec, name);
      if (has_foci) {
        res = build::release(res, spent_bodies(dec.sigma));
      } else if (d->concl.focused) {
        throw EngineStuck("focused cut with a focus-free first premise context");
      }
      if (!dec.suffix.empty()) res = dec.suffix.replay(res);
      break;
    }
    case Rule::Fcut: {
      const DerivPtr& d1 = d->prems[0];
      const DerivPtr& e = d->prems[1];
      if (p->conn == Conn::Atom) {
        if (d1->rule != Rule::Ax) throw EngineStuck("atomic fcut against a non-axiom");
        name = "principal-atom";
        res = e;
        break;
      }
      DecompResult dec = decompose_val(d1, p);
      res = fcut_case(p, dec.core, dec.sigma, e, ec, name);
      if (!dec.suffix.empty()) res = dec.suffix.replay(res);
      break;
    }
    case Rule::CutBang:
    case Rule::FcutBang:
      res = bang_cut_case(p, d->prems[0], d->prems[1], ec, name);
      break;
    default:
      throw InvalidInput("acut has no reduction cases");
  }

  if (!equal(res->concl, d->concl))
    throw EngineStuck("reduce_step changed the conclusion: " +
                      print_sequent(res->concl) + " vs " + print_sequent(d->concl));

  ReduceStepResult out;
  out.result = res;
  out.record.step = name;
  out.record.before = measure_of(d);
  out.record.spawned = ec.spawned.size();
  out.record.coercions = ec.coercions;
  CutMeasure worst;
  for (const auto& m : ec.spawned) {
    if (!(m < out.record.before))
      throw EngineStuck("spawned cut " + m.str() + " does not shrink below " +
                        out.record.before.str());
    if (worst < m) worst = m;
  }
  out.record.after = worst;
  return out;
}

std::optional<Path> innermost_cut(const DerivPtr& d) {
  for (size_t i = 0; i < d->prems.size(); i++) {
    if (auto sub = innermost_cut(d->prems[i])) {
      Path p{i};
      p.insert(p.end(), sub->begin(), sub->end());
      return p;
    }
  }
  if (is_cut_rule(d->rule)) return Path{};
  return std::nullopt;
}

bool contains_acut(const DerivPtr& d) {
  if (d->rule == Rule::Acut) return true;
  for (const auto& p : d->prems)
    if (contains_acut(p)) return true;
  return false;
}

void reject_inv_cuts(const DerivPtr& d) {
  if (d->rule == Rule::Cut && !d->concl.focused)
    throw IllFormedCut(
        "strict mode: cut node concluding an inversion sequent (focus-free "
        "residue); rerun in flexible mode");
  for (const auto& p : d->prems) reject_inv_cuts(p);
}

}  // namespace

ReduceStepResult reduce_step(const DerivPtr& d, const ReduceOptions& opts) {
  require_checked(d, "reduce_step");
  return reduce_step_impl(d, opts);
}

NormalizeResult normalize(const DerivPtr& d, const ReduceOptions& opts) {
  ValidityReport rep = check(d, Mode::Experimental);
  if (!rep.ok)
    throw InvalidInput("normalize: input fails check: " +
                       to_string(rep.violations.front()));
  if (contains_acut(d)) throw InvalidInput("acut has no reduction cases");
  if (!opts.flexible) reject_inv_cuts(d);

  NormalizeResult out;
  DerivPtr cur = d;
  // Anything beyond this is an engine loop, not a big proof.
  const size_t step_cap = 1u << 20;
  size_t steps = 0;
  ReduceOptions inner = opts;
  inner.flexible = true;  // residual lowered cuts are engine-made, always legal
  while (auto path = innermost_cut(cur)) {
    DerivPtr node = subtree_at(cur, *path);
    ReduceStepResult r = reduce_step_impl(node, inner);
    r.record.path = *path;
    cur = replace_at(cur, *path, r.result);
    out.trace.steps.push_back(r.record);
    if (opts.paranoid) {
      ValidityReport prep = check(cur, Mode::Strict);
      if (!prep.ok)
        throw EngineStuck("paranoid: intermediate derivation fails check: " +
                          to_string(prep.violations.front()));
    }
    if (++steps > step_cap) throw EngineStuck("normalize: step limit exceeded");
  }
  out.result = cur;
  return out;
}

}  // namespace llmfoc
