#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "llmfoc/errors.hpp"

namespace llmfoc {

// Polarized formulas. Shifts are ordinary constructors: Up takes a negative
// formula and is positive, Down takes a positive formula and is negative.
// The enum order is the canonical constructor order used by cmp().
enum class Conn : std::uint8_t {
  Atom, One, Tensor, Zero, Plus, Bang, Up,    // positive
  NegAtom, Bot, Par, Top, With, Quest, Down,  // negative
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Conn conn;
  std::string atom;  // Atom / NegAtom only
  FormulaPtr left;   // unary connectives use left only
  FormulaPtr right;
};

bool is_positive(Conn c);
inline bool is_positive(const FormulaPtr& f) { return is_positive(f->conn); }
inline bool is_negative(const FormulaPtr& f) { return !is_positive(f->conn); }

bool valid_identifier(const std::string& name);

// Constructors enforce the polarity discipline and throw Error on misuse.
FormulaPtr mk_atom(const std::string& name);
FormulaPtr mk_natom(const std::string& name);
FormulaPtr mk_one();
FormulaPtr mk_bot();
FormulaPtr mk_zero();
FormulaPtr mk_top();
FormulaPtr mk_tensor(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr mk_par(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr mk_plus(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr mk_with(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr mk_bang(const FormulaPtr& n);
FormulaPtr mk_quest(const FormulaPtr& p);
FormulaPtr mk_up(const FormulaPtr& n);
FormulaPtr mk_down(const FormulaPtr& p);

// Involutive duality; flips polarity, maps connectives pairwise.
FormulaPtr dual(const FormulaPtr& f);

// Node count, shifts included.
int fsize(const FormulaPtr& f);

// Total structural order: constructor tag, then subformulas, then atom name.
int cmp(const FormulaPtr& a, const FormulaPtr& b);
inline bool eq(const FormulaPtr& a, const FormulaPtr& b) { return cmp(a, b) == 0; }

// Canonical fully parenthesized s-expression rendering; parse o print = id.
std::string print_formula(const FormulaPtr& f);

// Parses the grammar
//   f ::= (atom id) | (natom id) | one | bot | zero | top
//       | (tensor f f) | (par f f) | (plus f f) | (with f f)
//       | (bang f) | (quest f) | (up f) | (down f)
// Throws ParseError with line/column on syntax or polarity violations.
FormulaPtr parse_formula(const std::string& text);

}  // namespace llmfoc
