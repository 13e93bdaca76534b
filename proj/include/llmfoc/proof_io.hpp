#pragma once

#include <string>

#include "llmfoc/check.hpp"
#include "llmfoc/derivation.hpp"
#include "vendor_json.hpp"

namespace llmfoc {

// Proof files store the root sequent only; premise sequents are reconstructed
// rule by rule while reading. Reading performs schema reconstruction but not
// a full validity check; run check() on the result for that.
DerivPtr parse_proof(const std::string& text);
std::string print_proof(const DerivPtr& d);

nlohmann::json formula_to_json(const FormulaPtr& f);
nlohmann::json sequent_to_json(const Sequent& s);
nlohmann::json proof_to_json(const DerivPtr& d);
nlohmann::json report_to_json(const ValidityReport& r);

}  // namespace llmfoc
