#pragma once

#include <optional>

#include "llmfoc/derivation.hpp"

namespace llmfoc {

// Bounded exhaustive search over the cut-free rules, read bottom-up. depth
// bounds the derivation height, limit the number of results, copy_cap the
// multiplicity of any one persistent formula per decide step.
struct SearchBudget {
  int depth = 6;
  size_t limit = 1;
  int copy_cap = 2;
};

struct SearchResult {
  std::vector<DerivPtr> proofs;
  // True when some branch was abandoned because the depth bound ran out, so
  // an empty result does not refute provability within larger budgets.
  bool depth_hit = false;
};

// First proof in the fixed enumeration order, if any.
std::optional<DerivPtr> prove(const Sequent& s, const SearchBudget& b);
inline std::optional<DerivPtr> prove(const Sequent& s, int depth) {
  return prove(s, SearchBudget{depth, 1, 2});
}

// All distinct proofs within the budget, up to limit, deterministically
// ordered. Throws InvalidInput on ill-formed sequents.
SearchResult enumerate_proofs(const Sequent& s, const SearchBudget& b);

}  // namespace llmfoc
