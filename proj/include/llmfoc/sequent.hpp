#pragma once

#include <string>

#include "llmfoc/context.hpp"

namespace llmfoc {

// Inversion sequents have only passive items; focused sequents must carry at
// least one focus (no rule concludes a focus-free focused sequent).
struct Sequent {
  bool focused = false;
  Formulas per;  // persistent context, positive formulas
  Ctx items;
};

Sequent mk_inv(Formulas per, Formulas ctx);
Sequent mk_foc(Formulas per, Ctx items);

bool equal(const Sequent& a, const Sequent& b);

// Empty string when well-formed, otherwise the violated clause.
std::string well_formed_error(const Sequent& s);
inline bool well_formed(const Sequent& s) { return well_formed_error(s).empty(); }

std::string print_sequent(const Sequent& s);
Sequent parse_sequent(const std::string& text);

}  // namespace llmfoc
