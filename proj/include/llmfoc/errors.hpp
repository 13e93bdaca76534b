#pragma once

#include <stdexcept>
#include <string>

namespace llmfoc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or polarity error in formula/sequent/proof text. Positions are 1-based.
struct ParseError : Error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& m) : Error(m) {}
};

// A proof-file node that fails its rule schema. Premise sequents are
// reconstructed while reading, so schema violations surface at read time;
// they are invalid proofs, not syntax errors.
struct SchemaError : Error {
  std::string node_path, rule, clause;
  SchemaError(std::string path_, std::string rule_, std::string clause_)
      : Error(path_ + " [" + rule_ + "] " + clause_),
        node_path(std::move(path_)), rule(std::move(rule_)),
        clause(std::move(clause_)) {}
};

struct NotSpent : Error {
  explicit NotSpent(const std::string& m) : Error(m) {}
};

struct IllFormedCut : Error {
  explicit IllFormedCut(const std::string& m) : Error(m) {}
};

// A configuration no reduction case covers. On checked input this indicates an
// engine bug; it is surfaced as an error, never swallowed.
struct EngineStuck : Error {
  explicit EngineStuck(const std::string& m) : Error(m) {}
};

}  // namespace llmfoc
