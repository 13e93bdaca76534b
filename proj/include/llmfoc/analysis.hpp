#pragma once

#include "llmfoc/check.hpp"
#include "llmfoc/derivation.hpp"
#include "llmfoc/search.hpp"

namespace llmfoc {

// Unpolarized linear-logic formulas, the target of shift erasure.
enum class UConn : std::uint8_t {
  Atom, NegAtom, One, Bot, Zero, Top, Tensor, Par, Plus, With, Bang, Quest,
};

struct UFormula;
using UFormulaPtr = std::shared_ptr<const UFormula>;

struct UFormula {
  UConn conn;
  std::string atom;
  UFormulaPtr left, right;
};

int cmp(const UFormulaPtr& a, const UFormulaPtr& b);
inline bool eq(const UFormulaPtr& a, const UFormulaPtr& b) { return cmp(a, b) == 0; }
std::string print_uformula(const UFormulaPtr& f);
int ufsize(const UFormulaPtr& f);
UFormulaPtr unegate(const UFormulaPtr& f);

// Strips the shifts and maps every other connective to itself.
UFormulaPtr erase_formula(const FormulaPtr& f);

using UFormulas = std::vector<UFormulaPtr>;
UFormulas usorted(UFormulas fs);

// Dyadic one-sided sequents (per: ctx) with copy reintroducing a persistent
// member. Nodes store their conclusions; principal identifies the formula a
// rule acts on.
enum class URule : std::uint8_t {
  Ax, One, Tensor, Bot, Par, Top, With, Plus1, Plus2, Bang, Quest, Copy,
};

const char* urule_name(URule r);

struct UDeriv;
using UDerivPtr = std::shared_ptr<const UDeriv>;

struct UDeriv {
  URule rule;
  UFormulas per;
  UFormulas ctx;
  UFormulaPtr principal;  // null for Ax/One
  std::vector<UDerivPtr> prems;
};

struct UReport {
  bool ok = true;
  std::vector<std::string> violations;
};

UReport check_dyadic(const UDerivPtr& d);
std::string print_udyadic(const UDerivPtr& d);

// Maps a check-valid cut-free derivation to a dyadic one: decide becomes one
// copy per persistent duplicate, release disappears, logical rules map to
// their counterparts. Throws InvalidInput on cut nodes or invalid input.
UDerivPtr erase_derivation(const DerivPtr& d);

// One phase per decide node: its focus multiset (theta + copies) and the
// extent of the focused segment it opens.
struct Phase {
  Path decide_path;
  Formulas foci;   // theta formulas plus copies
  size_t node_count = 0;  // focused nodes of the segment, releases included
};

std::vector<Phase> phases(const DerivPtr& d);

enum class MaximalityStatus { Maximal, Extendable, DepthExhausted };

struct MaximalityEntry {
  Path decide_path;
  MaximalityStatus status = MaximalityStatus::Maximal;
  FormulaPtr witness_formula;  // Extendable only
  DerivPtr witness_proof;      // completing proof of the extended premise
};

struct MaximalityReport {
  std::vector<MaximalityEntry> entries;
  bool all_maximal() const;
};

// A decide node is extendable when one more focusable positive (an unselected
// downshift occurrence or one more persistent copy) still admits a completing
// proof of the extended premise within the depth bound; the rest of the
// derivation is untouched. Reports maximal-within-depth otherwise, or
// depth-exhausted when the search ran out of budget before deciding.
MaximalityReport check_maximal(const DerivPtr& d, int depth);

std::string maximality_line(const MaximalityEntry& e);

}  // namespace llmfoc
