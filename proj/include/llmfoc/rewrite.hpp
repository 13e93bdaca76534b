#pragma once

#include "llmfoc/check.hpp"
#include "llmfoc/derivation.hpp"

namespace llmfoc {

// One step of a replayable open derivation: rebuilds a tensor or plus rule
// around the hole. A tensor frame captures the untouched sibling subproof,
// which counts towards the step total.
struct Frame {
  enum class Kind { Tensor, Plus } kind = Kind::Tensor;
  bool hole_left = true;    // tensor: which premise the hole fills
  DerivPtr captured;        // tensor: the other premise
  bool plus_left = true;    // plus: PlusL or PlusR
  FormulaPtr a, b;          // principal parts: conclusion focus is [a ⊗/⊕ b]
  size_t steps() const;
};

// A context-parametric suffix: replay transforms any proof of
// |= per: sigma, delta into one of |= per: psi, delta.
struct OpenDerivation {
  std::vector<Frame> frames;
  size_t steps() const;
  bool empty() const { return frames.empty(); }
  DerivPtr replay(const DerivPtr& d) const;
};

struct DecompResult {
  DerivPtr core;  // proves |= per: sigma, [p]
  OpenDerivation suffix;
  Ctx sigma;  // spent
};

// Splits a focused proof at the designated focus: a core whose context is
// spent plus a replayable suffix, with dsize(core) + suffix.steps() equal to
// dsize(input) exactly. focus_index points into the sorted conclusion context.
DecompResult decompose(const DerivPtr& d, size_t focus_index);

// Inverts the spent foci around the designated focus, preserving the rule
// skeleton node for node. focus_index as in decompose.
DerivPtr lower_deriv(const DerivPtr& d, size_t focus_index);

// Lexicographic termination measure of a cut node.
struct CutMeasure {
  int formula_size = 0;
  int kind_rank = 0;  // persistent cuts rank 1, linear cuts rank 0
  int weight = 0;     // premise dsizes
  friend bool operator<(const CutMeasure& a, const CutMeasure& b);
  friend bool operator==(const CutMeasure& a, const CutMeasure& b);
  std::string str() const;
};

CutMeasure measure_of(const DerivPtr& cut_node);

struct StepRecord {
  std::string step;
  Path path;
  CutMeasure before;
  CutMeasure after;     // largest residual cut spawned; zeros when none
  size_t spawned = 0;
  size_t coercions = 0; // residual cuts delivered at the inversion judgment
  std::string line() const;
};

struct ReductionTrace {
  std::vector<StepRecord> steps;
};

struct ReduceOptions {
  bool flexible = true;  // admit cut nodes whose conclusion is an inversion
                         // sequent (the lowered form) in the input
  bool paranoid = false; // re-check the whole derivation after every step
  bool trace = false;
};

struct ReduceStepResult {
  DerivPtr result;
  StepRecord record;
};

// Rewrites the root, which must be a cut-family node with cut-free premises,
// into a derivation of the same conclusion whose residual cuts are strictly
// smaller in the measure.
ReduceStepResult reduce_step(const DerivPtr& d, const ReduceOptions& opts = {});

struct NormalizeResult {
  DerivPtr result;
  ReductionTrace trace;
};

// Innermost-first cut elimination. The output is cut-free, check-valid and
// concludes the root sequent.
NormalizeResult normalize(const DerivPtr& d, const ReduceOptions& opts = {});

}  // namespace llmfoc
