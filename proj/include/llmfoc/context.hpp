#pragma once

#include <vector>

#include "llmfoc/formula.hpp"

namespace llmfoc {

// An item of a focused context: a passive (negative) formula or a focus [P]
// on a positive formula.
struct FocItem {
  bool focused = false;
  FormulaPtr f;
};

FocItem passive(const FormulaPtr& n);
FocItem focus(const FormulaPtr& p);

int cmp(const FocItem& a, const FocItem& b);
inline bool eq(const FocItem& a, const FocItem& b) { return cmp(a, b) == 0; }

// Multisets are canonically sorted sequences. Formulas is used both for the
// persistent context (positives) and for inversion contexts (negatives).
using Formulas = std::vector<FormulaPtr>;
using Ctx = std::vector<FocItem>;

Formulas sorted(Formulas fs);
Ctx sorted(Ctx items);

void insert_one(Formulas& fs, const FormulaPtr& f);
void insert_one(Ctx& items, const FocItem& it);
bool erase_one(Formulas& fs, const FormulaPtr& f);
bool erase_one(Ctx& items, const FocItem& it);
size_t count_of(const Formulas& fs, const FormulaPtr& f);
size_t count_of(const Ctx& items, const FocItem& it);
bool contains(const Formulas& fs, const FormulaPtr& f);
bool contains(const Ctx& items, const FocItem& it);
Formulas merged(const Formulas& a, const Formulas& b);
Ctx merged(const Ctx& a, const Ctx& b);
// a \ b as multisets; empty result of subtract_all means b covers a.
Formulas diff(const Formulas& a, const Formulas& b);
Ctx diff(const Ctx& a, const Ctx& b);
bool submultiset(const Formulas& a, const Formulas& b);

bool equal(const Formulas& a, const Formulas& b);
bool equal(const Ctx& a, const Ctx& b);

Ctx as_passives(const Formulas& negs);
Ctx as_foci(const Formulas& poss);
Formulas passives_of(const Ctx& items);
Formulas foci_of(const Ctx& items);
size_t focus_count(const Ctx& items);

// A context is spent when every focus has the shape [up N].
bool is_spent(const Ctx& items);

// Each focus [P] becomes the passive down P; passives are unchanged.
Formulas neutralise(const Ctx& items);

// Each spent focus [up N] becomes the passive N. Throws NotSpent otherwise.
Formulas lower_ctx(const Ctx& items);

// All contexts reachable by promoting any subset of (down P) passives to
// foci [P]. One result per occurrence subset: 2^k entries for k downshift
// passives, so repeated occurrences yield repeated entries.
std::vector<Ctx> activations(const Ctx& items);

}  // namespace llmfoc
