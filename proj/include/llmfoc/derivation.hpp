#pragma once

#include <optional>
#include <vector>

#include "llmfoc/sequent.hpp"

namespace llmfoc {

enum class Rule : std::uint8_t {
  Ax, One, Tensor, PlusL, PlusR, Bang, Release,
  Bot, Par, Top, With, Quest, Decide,
  Cut, Fcut, CutBang, FcutBang, Acut,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);
size_t rule_arity(Rule r);
bool is_cut_rule(Rule r);

// Per-node data beyond the conclusion. Indices refer to the canonically
// sorted conclusion context.
//
//   main        principal item (Tensor/PlusL/PlusR/Par/With/Quest)
//   left        items sent to the first premise: for Tensor indices are into
//               the context with the principal removed; for the linear cuts
//               they are into the full context
//   copies      positive formulas copied from the persistent context (Decide)
//   theta       indices of the downshift items brought into focus (Decide)
//   cut_formula cut family
//   acut_psi / acut_gamma   recorded premise split of an Acut, whose
//               conclusion must be an activation of psi + gamma
struct RuleData {
  std::optional<size_t> main;
  std::vector<size_t> left;
  Formulas copies;
  std::vector<size_t> theta;
  FormulaPtr cut_formula;
  Ctx acut_psi;
  Formulas acut_gamma;
};

struct Deriv;
using DerivPtr = std::shared_ptr<const Deriv>;

struct Deriv {
  Rule rule;
  Sequent concl;
  RuleData data;
  std::vector<DerivPtr> prems;
};

int dsize(const DerivPtr& d);   // number of rule instances
int dheight(const DerivPtr& d); // longest root-to-leaf node count
bool is_cut_free(const DerivPtr& d);

bool equal(const DerivPtr& a, const DerivPtr& b);

using Path = std::vector<size_t>;
std::string path_str(const Path& p);
DerivPtr subtree_at(const DerivPtr& d, const Path& p);
DerivPtr replace_at(const DerivPtr& d, const Path& p, const DerivPtr& repl);

// Bottom-up constructors. Each computes the conclusion from its premises and
// records the rule data; preconditions are enforced with Error/InvalidInput.
namespace build {

DerivPtr ax(Formulas per, const std::string& atom_name);
DerivPtr one(Formulas per);
// d1 proves |= per: psi, [a]; d2 proves |= per: xi, [b].
DerivPtr tensor(const DerivPtr& d1, const DerivPtr& d2, const FormulaPtr& a,
                const FormulaPtr& b);
DerivPtr plusL(const DerivPtr& d1, const FormulaPtr& a, const FormulaPtr& b);
DerivPtr plusR(const DerivPtr& d1, const FormulaPtr& a, const FormulaPtr& b);
DerivPtr bang(const DerivPtr& d1, const FormulaPtr& n);
// d1 proves |- per: gamma, delta; conclusion focuses up(N) for each N in delta.
DerivPtr release(const DerivPtr& d1, const Formulas& delta);
DerivPtr bot(const DerivPtr& d1);
DerivPtr par(const DerivPtr& d1, const FormulaPtr& n, const FormulaPtr& m);
DerivPtr top(Formulas per, Formulas ctx);
DerivPtr with(const DerivPtr& d1, const DerivPtr& d2, const FormulaPtr& n,
              const FormulaPtr& m);
DerivPtr quest(const DerivPtr& d1, const FormulaPtr& p);
// d1 proves the focused premise whose foci are exactly copies + theta.
DerivPtr decide(const DerivPtr& d1, const Formulas& theta, const Formulas& copies);
// Linear cut. d1 proves |= per: psi, [p]; d2 proves |- per: gamma, dual(p).
// When psi is focus-free the conclusion is delivered at the inversion
// judgment (the lowered form); otherwise it is the focused sequent.
DerivPtr cut(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2);
DerivPtr fcut(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2);
DerivPtr cut_bang(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2);
DerivPtr fcut_bang(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2);
// Experimental: conclusion items must be an activation of psi + gamma.
DerivPtr acut(const FormulaPtr& p, const DerivPtr& d1, const DerivPtr& d2,
              const Ctx& conclusion_items);

}  // namespace build

// Extends the persistent context of every node by the given positives.
DerivPtr weaken_per(const DerivPtr& d, const Formulas& extra);

}  // namespace llmfoc
