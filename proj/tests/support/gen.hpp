#pragma once

#include <random>
#include <vector>

#include "llmfoc/analysis.hpp"
#include "llmfoc/derivation.hpp"
#include "llmfoc/rewrite.hpp"
#include "llmfoc/search.hpp"

// Shared fixtures and generators for the unit and acceptance suites.
namespace testsupport {

using namespace llmfoc;

// atoms a, b, c, d
FormulaPtr A();
FormulaPtr B();
FormulaPtr C();
FormulaPtr D();

// The worked multifocused proof: one phase focusing both a (x) ^b and
// c (x) ^d, then a phase focusing b (x) d.
DerivPtr example1();
Sequent example1_endsequent();
// Its upper focused phase (the premise of the bottom decide).
DerivPtr example1_upper();

// The identity-expansion proof |= .: v(a (x) ^b-), [^bot], [^(a- par vb)].
DerivPtr badcut_left();
// The cut of badcut_left against example1 (focused conclusion, focus [^bot]).
DerivPtr badcut();

struct Gen {
  std::mt19937_64 rng;
  std::vector<std::string> atoms;

  explicit Gen(std::uint64_t seed, int n_atoms = 4);

  size_t pick(size_t n);
  bool coin(double p = 0.5);

  FormulaPtr pos(int size);
  FormulaPtr neg(int size);
  FormulaPtr formula(int size);
  FocItem item(int size);
  Ctx context(size_t max_items, int size);

  // Random check-valid derivations, grown from leaves by rule application.
  DerivPtr foc_proof(int depth);
  DerivPtr inv_proof(int depth);
};

// Derivations of the given conclusion regenerated through the search module.
std::vector<DerivPtr> search_corpus(Gen& gen, size_t want_foc, int depth);

// A cut node of every kind composed from cut-free premises, ready to reduce.
struct CutInstance {
  DerivPtr node;
  Rule kind;
};
std::vector<CutInstance> cut_corpus(Gen& gen, size_t want);

}  // namespace testsupport
