#include "llmfoc/search.hpp"

#include <functional>

namespace llmfoc {

namespace {

struct Run {
  FocItem item;
  size_t count;
};

std::vector<Run> runs_of(const Ctx& items) {
  std::vector<Run> out;
  for (const auto& it : items) {
    if (!out.empty() && eq(out.back().item, it))
      out.back().count++;
    else
      out.push_back({it, 1});
  }
  return out;
}

class Searcher {
 public:
  Searcher(const SearchBudget& b) : b_(b) {}

  SearchResult run(const Sequent& s) {
    std::string wf = well_formed_error(s);
    if (!wf.empty()) throw InvalidInput("search: " + wf);
    SearchResult res;
    solve(s, b_.depth, [&](const DerivPtr& d) {
      res.proofs.push_back(d);
      return res.proofs.size() < b_.limit;
    });
    res.depth_hit = depth_hit_;
    return res;
  }

 private:
  using Yield = std::function<bool(const DerivPtr&)>;

  // Enumerates proofs of s with height at most h, feeding each to y.
  // Returns false as soon as y asks to stop.
  bool solve(const Sequent& s, int h, const Yield& y) {
    if (h <= 0) {
      depth_hit_ = true;
      return true;
    }
    return s.focused ? solve_foc(s, h, y) : solve_inv(s, h, y);
  }

  bool solve_foc(const Sequent& s, int h, const Yield& y) {
    const Ctx& items = s.items;
    // ax
    if (items.size() == 2 && !items[0].focused && items[1].focused &&
        items[0].f->conn == Conn::NegAtom && items[1].f->conn == Conn::Atom &&
        items[0].f->atom == items[1].f->atom) {
      if (!y(build::ax(s.per, items[1].f->atom))) return false;
    }
    // one
    if (items.size() == 1 && items[0].focused && items[0].f->conn == Conn::One) {
      if (!y(build::one(s.per))) return false;
    }
    // tensor: every distinct tensor focus, every split of the rest
    for (const auto& run : runs_of(items)) {
      if (!run.item.focused || run.item.f->conn != Conn::Tensor) continue;
      FormulaPtr a = run.item.f->left, b = run.item.f->right;
      Ctx rest = items;
      erase_one(rest, run.item);
      bool go = each_submultiset(rest, [&](const Ctx& sel, const Ctx& other) {
        Ctx p1 = sel, p2 = other;
        insert_one(p1, focus(a));
        insert_one(p2, focus(b));
        return solve(mk_foc(s.per, p1), h - 1, [&](const DerivPtr& d1) {
          return solve(mk_foc(s.per, p2), h - 1, [&](const DerivPtr& d2) {
            return y(build::tensor(d1, d2, a, b));
          });
        });
      });
      if (!go) return false;
    }
    // plus
    for (const auto& run : runs_of(items)) {
      if (!run.item.focused || run.item.f->conn != Conn::Plus) continue;
      FormulaPtr a = run.item.f->left, b = run.item.f->right;
      Ctx rest = items;
      erase_one(rest, run.item);
      Ctx p1 = rest, p2 = rest;
      insert_one(p1, focus(a));
      insert_one(p2, focus(b));
      if (!solve(mk_foc(s.per, p1), h - 1, [&](const DerivPtr& d1) {
            return y(build::plusL(d1, a, b));
          }))
        return false;
      if (!solve(mk_foc(s.per, p2), h - 1, [&](const DerivPtr& d1) {
            return y(build::plusR(d1, a, b));
          }))
        return false;
    }
    // bang
    if (items.size() == 1 && items[0].focused && items[0].f->conn == Conn::Bang) {
      FormulaPtr n = items[0].f->left;
      if (!solve(mk_inv(s.per, {n}), h - 1, [&](const DerivPtr& d1) {
            return y(build::bang(d1, n));
          }))
        return false;
    }
    // release: applicable when every focus is an upshift; blurs all at once
    {
      Formulas delta;
      bool all_up = true;
      for (const auto& it : items) {
        if (!it.focused) continue;
        if (it.f->conn != Conn::Up) {
          all_up = false;
          break;
        }
        delta.push_back(it.f->left);
      }
      if (all_up && !delta.empty()) {
        Formulas prem = merged(passives_of(items), sorted(delta));
        if (!solve(mk_inv(s.per, prem), h - 1, [&](const DerivPtr& d1) {
              return y(build::release(d1, delta));
            }))
          return false;
      }
    }
    return true;
  }

  bool solve_inv(const Sequent& s, int h, const Yield& y) {
    const Ctx& items = s.items;
    // bot
    if (contains(items, passive(mk_bot()))) {
      Ctx rest = items;
      erase_one(rest, passive(mk_bot()));
      if (!solve(inv_of(s.per, rest), h - 1, [&](const DerivPtr& d1) {
            return y(build::bot(d1));
          }))
        return false;
    }
    // par
    for (const auto& run : runs_of(items)) {
      if (run.item.focused || run.item.f->conn != Conn::Par) continue;
      FormulaPtr n = run.item.f->left, m = run.item.f->right;
      Ctx rest = items;
      erase_one(rest, run.item);
      insert_one(rest, passive(n));
      insert_one(rest, passive(m));
      if (!solve(inv_of(s.per, rest), h - 1, [&](const DerivPtr& d1) {
            return y(build::par(d1, n, m));
          }))
        return false;
    }
    // top
    if (contains(items, passive(mk_top()))) {
      Formulas ctx;
      for (const auto& it : items) ctx.push_back(it.f);
      if (!y(build::top(s.per, ctx))) return false;
    }
    // with
    for (const auto& run : runs_of(items)) {
      if (run.item.focused || run.item.f->conn != Conn::With) continue;
      FormulaPtr n = run.item.f->left, m = run.item.f->right;
      Ctx rest = items;
      erase_one(rest, run.item);
      Ctx p1 = rest, p2 = rest;
      insert_one(p1, passive(n));
      insert_one(p2, passive(m));
      if (!solve(inv_of(s.per, p1), h - 1, [&](const DerivPtr& d1) {
            return solve(inv_of(s.per, p2), h - 1, [&](const DerivPtr& d2) {
              return y(build::with(d1, d2, n, m));
            });
          }))
        return false;
    }
    // quest
    for (const auto& run : runs_of(items)) {
      if (run.item.focused || run.item.f->conn != Conn::Quest) continue;
      FormulaPtr p = run.item.f->left;
      Ctx rest = items;
      erase_one(rest, run.item);
      Formulas per = s.per;
      insert_one(per, p);
      if (!solve(inv_of(per, rest), h - 1, [&](const DerivPtr& d1) {
            return y(build::quest(d1, p));
          }))
        return false;
    }
    // decide: every (theta, copies) choice, at least one focus total
    {
      std::vector<Run> downs;
      for (const auto& run : runs_of(items))
        if (!run.item.focused && run.item.f->conn == Conn::Down) downs.push_back(run);
      std::vector<Run> pers;
      for (const auto& run : runs_of(as_passives_like(s.per)))
        pers.push_back({run.item, static_cast<size_t>(b_.copy_cap)});
      std::vector<size_t> tcount(downs.size(), 0), ccount(pers.size(), 0);
      bool go = each_counts(downs, tcount, 0, [&]() {
        return each_counts(pers, ccount, 0, [&]() {
          Formulas theta, copies;
          for (size_t i = 0; i < downs.size(); i++)
            for (size_t k = 0; k < tcount[i]; k++)
              theta.push_back(downs[i].item.f->left);
          for (size_t i = 0; i < pers.size(); i++)
            for (size_t k = 0; k < ccount[i]; k++) copies.push_back(pers[i].item.f);
          if (theta.empty() && copies.empty()) return true;
          Ctx prem;
          std::vector<size_t> left_theta = tcount;
          for (const auto& it : items) {
            bool took = false;
            for (size_t i = 0; i < downs.size(); i++) {
              if (left_theta[i] > 0 && eq(it, downs[i].item)) {
                prem.push_back(focus(it.f->left));
                left_theta[i]--;
                took = true;
                break;
              }
            }
            if (!took) prem.push_back(it);
          }
          for (const auto& c : copies) prem.push_back(focus(c));
          return solve(mk_foc(s.per, sorted(std::move(prem))), h - 1,
                       [&](const DerivPtr& d1) {
                         return y(build::decide(d1, theta, copies));
                       });
        });
      });
      if (!go) return false;
    }
    return true;
  }

  static Sequent inv_of(const Formulas& per, const Ctx& items) {
    Sequent s;
    s.focused = false;
    s.per = per;
    s.items = sorted(items);
    return s;
  }

  // The persistent context as pseudo-items so runs_of applies.
  static Ctx as_passives_like(const Formulas& per) {
    Ctx out;
    for (const auto& p : per) out.push_back(FocItem{true, p});
    return out;
  }

  // Enumerates all submultisets of a sorted context (with complements).
  static bool each_submultiset(const Ctx& rest,
                               const std::function<bool(const Ctx&, const Ctx&)>& f) {
    auto rs = runs_of(rest);
    std::vector<size_t> take(rs.size(), 0);
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
      if (i == rs.size()) {
        Ctx sel, other;
        for (size_t k = 0; k < rs.size(); k++) {
          for (size_t j = 0; j < take[k]; j++) sel.push_back(rs[k].item);
          for (size_t j = take[k]; j < rs[k].count; j++) other.push_back(rs[k].item);
        }
        return f(sel, other);
      }
      for (take[i] = 0; take[i] <= rs[i].count; take[i]++)
        if (!go(i + 1)) return false;
      return true;
    };
    return go(0);
  }

  static bool each_counts(const std::vector<Run>& rs, std::vector<size_t>& out,
                          size_t i, const std::function<bool()>& f) {
    if (i == rs.size()) return f();
    for (out[i] = 0; out[i] <= rs[i].count; out[i]++)
      if (!each_counts(rs, out, i + 1, f)) return false;
    return true;
  }

  SearchBudget b_;
  bool depth_hit_ = false;
};

}  // namespace

std::optional<DerivPtr> prove(const Sequent& s, const SearchBudget& b) {
  SearchBudget one = b;
  one.limit = 1;
  SearchResult r = Searcher(one).run(s);
  if (r.proofs.empty()) return std::nullopt;
  return r.proofs.front();
}

SearchResult enumerate_proofs(const Sequent& s, const SearchBudget& b) {
  return Searcher(b).run(s);
}

}  // namespace llmfoc
