#include "llmfoc/context.hpp"

#include <algorithm>

namespace llmfoc {

FocItem passive(const FormulaPtr& n) {
  if (!is_negative(n)) throw Error("passive items must be negative");
  return FocItem{false, n};
}

FocItem focus(const FormulaPtr& p) {
  if (!is_positive(p)) throw Error("foci must be positive");
  return FocItem{true, p};
}

int cmp(const FocItem& a, const FocItem& b) {
  if (a.focused != b.focused) return a.focused ? 1 : -1;
  return cmp(a.f, b.f);
}

namespace {
bool lt_f(const FormulaPtr& a, const FormulaPtr& b) { return cmp(a, b) < 0; }
bool lt_i(const FocItem& a, const FocItem& b) { return cmp(a, b) < 0; }
}  // namespace

Formulas sorted(Formulas fs) {
  std::sort(fs.begin(), fs.end(), lt_f);
  return fs;
}

Ctx sorted(Ctx items) {
  std::sort(items.begin(), items.end(), lt_i);
  return items;
}

void insert_one(Formulas& fs, const FormulaPtr& f) {
  fs.insert(std::upper_bound(fs.begin(), fs.end(), f, lt_f), f);
}

void insert_one(Ctx& items, const FocItem& it) {
  items.insert(std::upper_bound(items.begin(), items.end(), it, lt_i), it);
}

bool erase_one(Formulas& fs, const FormulaPtr& f) {
  auto pos = std::lower_bound(fs.begin(), fs.end(), f, lt_f);
  if (pos == fs.end() || cmp(*pos, f) != 0) return false;
  fs.erase(pos);
  return true;
}

bool erase_one(Ctx& items, const FocItem& it) {
  auto pos = std::lower_bound(items.begin(), items.end(), it, lt_i);
  if (pos == items.end() || cmp(*pos, it) != 0) return false;
  items.erase(pos);
  return true;
}

size_t count_of(const Formulas& fs, const FormulaPtr& f) {
  auto r = std::equal_range(fs.begin(), fs.end(), f, lt_f);
  return static_cast<size_t>(r.second - r.first);
}

size_t count_of(const Ctx& items, const FocItem& it) {
  auto r = std::equal_range(items.begin(), items.end(), it, lt_i);
  return static_cast<size_t>(r.second - r.first);
}

bool contains(const Formulas& fs, const FormulaPtr& f) { return count_of(fs, f) > 0; }
bool contains(const Ctx& items, const FocItem& it) { return count_of(items, it) > 0; }

Formulas merged(const Formulas& a, const Formulas& b) {
  Formulas out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), lt_f);
  return out;
}

Ctx merged(const Ctx& a, const Ctx& b) {
  Ctx out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), lt_i);
  return out;
}

Formulas diff(const Formulas& a, const Formulas& b) {
  Formulas out = a;
  for (const auto& f : b) erase_one(out, f);
  return out;
}

Ctx diff(const Ctx& a, const Ctx& b) {
  Ctx out = a;
  for (const auto& it : b) erase_one(out, it);
  return out;
}

bool submultiset(const Formulas& a, const Formulas& b) {
  Formulas rest = b;
  for (const auto& f : a)
    if (!erase_one(rest, f)) return false;
  return true;
}

bool equal(const Formulas& a, const Formulas& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); i++)
    if (!eq(a[i], b[i])) return false;
  return true;
}

bool equal(const Ctx& a, const Ctx& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); i++)
    if (!eq(a[i], b[i])) return false;
  return true;
}

Ctx as_passives(const Formulas& negs) {
  Ctx out;
  out.reserve(negs.size());
  for (const auto& n : negs) out.push_back(passive(n));
  return sorted(std::move(out));
}

Ctx as_foci(const Formulas& poss) {
  Ctx out;
  out.reserve(poss.size());
  for (const auto& p : poss) out.push_back(focus(p));
  return sorted(std::move(out));
}

Formulas passives_of(const Ctx& items) {
  Formulas out;
  for (const auto& it : items)
    if (!it.focused) out.push_back(it.f);
  return sorted(std::move(out));
}

Formulas foci_of(const Ctx& items) {
  Formulas out;
  for (const auto& it : items)
    if (it.focused) out.push_back(it.f);
  return sorted(std::move(out));
}

size_t focus_count(const Ctx& items) {
  size_t n = 0;
  for (const auto& it : items) n += it.focused;
  return n;
}

bool is_spent(const Ctx& items) {
  for (const auto& it : items)
    if (it.focused && it.f->conn != Conn::Up) return false;
  return true;
}

Formulas neutralise(const Ctx& items) {
  Formulas out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.focused ? mk_down(it.f) : it.f);
  return sorted(std::move(out));
}

Formulas lower_ctx(const Ctx& items) {
  Formulas out;
  out.reserve(items.size());
  for (const auto& it : items) {
    if (!it.focused) {
      out.push_back(it.f);
    } else if (it.f->conn == Conn::Up) {
      out.push_back(it.f->left);
    } else {
      throw NotSpent("lower: focus " + print_formula(it.f) + " is not an upshift");
    }
  }
  return sorted(std::move(out));
}

std::vector<Ctx> activations(const Ctx& items) {
  std::vector<size_t> slots;  // positions of downshift passives
  for (size_t i = 0; i < items.size(); i++)
    if (!items[i].focused && items[i].f->conn == Conn::Down) slots.push_back(i);
  std::vector<Ctx> out;
  size_t n = slots.size();
  out.reserve(static_cast<size_t>(1) << n);
  for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); mask++) {
    Ctx v = items;
    for (size_t j = 0; j < n; j++)
      if (mask & (static_cast<size_t>(1) << j))
        v[slots[j]] = focus(items[slots[j]].f->left);
    out.push_back(sorted(std::move(v)));
  }
  return out;
}

}  // namespace llmfoc
