#pragma once

#include <optional>
#include <string>
#include <vector>

#include "llmfoc/derivation.hpp"

namespace llmfoc {

// Strict admits the rules of the base calculus plus the cut family;
// Experimental additionally admits acut.
enum class Mode { Strict, Experimental };

struct Violation {
  Path path;
  Rule rule;
  std::string message;
};

struct ValidityReport {
  bool ok = true;
  std::vector<Violation> violations;
};

std::string to_string(const Violation& v);

// The premise sequents a node's conclusion, rule and data determine. Returns
// nullopt with *err set when the node does not instantiate its rule schema.
// This same function drives both proof-file reading and checking.
std::optional<std::vector<Sequent>> reconstruct_premises(const Sequent& concl,
                                                         Rule rule,
                                                         const RuleData& data,
                                                         Mode mode,
                                                         std::string* err);

ValidityReport check(const DerivPtr& d, Mode mode = Mode::Strict);

}  // namespace llmfoc
