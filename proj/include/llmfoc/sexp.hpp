#pragma once

#include <optional>
#include <string>

#include "llmfoc/errors.hpp"
#include "llmfoc/formula.hpp"

// Shared s-expression tokenizer for the formula, sequent and proof readers.

namespace llmfoc::sexp {

struct Token {
  enum Kind { LParen, RParen, Symbol, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text);
  Token peek();
  Token next();

 private:
  void skip_ws();
  Token next_token();

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::optional<Token> cached_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg);
Token expect(Lexer& lx, Token::Kind k, const char* what);
Token expect_symbol(Lexer& lx, const char* what);
void expect_close(Lexer& lx);

FormulaPtr parse_formula(Lexer& lx);

}  // namespace llmfoc::sexp

namespace llmfoc {
struct Sequent;
}
namespace llmfoc::sexp {
Sequent parse_sequent(Lexer& lx);
}  // namespace llmfoc::sexp
