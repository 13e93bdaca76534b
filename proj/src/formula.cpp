#include "llmfoc/formula.hpp"

#include <cctype>

#include "llmfoc/sexp.hpp"

namespace llmfoc {

bool is_positive(Conn c) {
  switch (c) {
    case Conn::Atom:
    case Conn::One:
    case Conn::Tensor:
    case Conn::Zero:
    case Conn::Plus:
    case Conn::Bang:
    case Conn::Up:
      return true;
    default:
      return false;
  }
}

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

namespace {

FormulaPtr node(Conn c, std::string atom, FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{c, std::move(atom), std::move(l), std::move(r)});
}

FormulaPtr leaf(Conn c) {
  static const FormulaPtr one = node(Conn::One, "", nullptr, nullptr);
  static const FormulaPtr bot = node(Conn::Bot, "", nullptr, nullptr);
  static const FormulaPtr zero = node(Conn::Zero, "", nullptr, nullptr);
  static const FormulaPtr top = node(Conn::Top, "", nullptr, nullptr);
  switch (c) {
    case Conn::One: return one;
    case Conn::Bot: return bot;
    case Conn::Zero: return zero;
    default: return top;
  }
}

void require(bool ok, const char* msg) {
  if (!ok) throw Error(msg);
}

}  // namespace

FormulaPtr mk_atom(const std::string& name) {
  require(valid_identifier(name), "atom name must be a valid identifier");
  return node(Conn::Atom, name, nullptr, nullptr);
}

FormulaPtr mk_natom(const std::string& name) {
  require(valid_identifier(name), "atom name must be a valid identifier");
  return node(Conn::NegAtom, name, nullptr, nullptr);
}

FormulaPtr mk_one() { return leaf(Conn::One); }
FormulaPtr mk_bot() { return leaf(Conn::Bot); }
FormulaPtr mk_zero() { return leaf(Conn::Zero); }
FormulaPtr mk_top() { return leaf(Conn::Top); }

FormulaPtr mk_tensor(const FormulaPtr& a, const FormulaPtr& b) {
  require(is_positive(a) && is_positive(b), "tensor requires positive operands");
  return node(Conn::Tensor, "", a, b);
}

FormulaPtr mk_par(const FormulaPtr& a, const FormulaPtr& b) {
  require(is_negative(a) && is_negative(b), "par requires negative operands");
  return node(Conn::Par, "", a, b);
}

FormulaPtr mk_plus(const FormulaPtr& a, const FormulaPtr& b) {
  require(is_positive(a) && is_positive(b), "plus requires positive operands");
  return node(Conn::Plus, "", a, b);
}

FormulaPtr mk_with(const FormulaPtr& a, const FormulaPtr& b) {
  require(is_negative(a) && is_negative(b), "with requires negative operands");
  return node(Conn::With, "", a, b);
}

FormulaPtr mk_bang(const FormulaPtr& n) {
  require(is_negative(n), "bang requires a negative operand");
  return node(Conn::Bang, "", n, nullptr);
}

FormulaPtr mk_quest(const FormulaPtr& p) {
  require(is_positive(p), "quest requires a positive operand");
  return node(Conn::Quest, "", p, nullptr);
}

FormulaPtr mk_up(const FormulaPtr& n) {
  require(is_negative(n), "up requires a negative operand");
  return node(Conn::Up, "", n, nullptr);
}

FormulaPtr mk_down(const FormulaPtr& p) {
  require(is_positive(p), "down requires a positive operand");
  return node(Conn::Down, "", p, nullptr);
}

FormulaPtr dual(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom: return mk_natom(f->atom);
    case Conn::NegAtom: return mk_atom(f->atom);
    case Conn::One: return mk_bot();
    case Conn::Bot: return mk_one();
    case Conn::Zero: return mk_top();
    case Conn::Top: return mk_zero();
    case Conn::Tensor: return mk_par(dual(f->left), dual(f->right));
    case Conn::Par: return mk_tensor(dual(f->left), dual(f->right));
    case Conn::Plus: return mk_with(dual(f->left), dual(f->right));
    case Conn::With: return mk_plus(dual(f->left), dual(f->right));
    case Conn::Bang: return mk_quest(dual(f->left));
    case Conn::Quest: return mk_bang(dual(f->left));
    case Conn::Up: return mk_down(dual(f->left));
    case Conn::Down: return mk_up(dual(f->left));
  }
  throw Error("dual: bad connective");
}

int fsize(const FormulaPtr& f) {
  int n = 1;
  if (f->left) n += fsize(f->left);
  if (f->right) n += fsize(f->right);
  return n;
}

int cmp(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->conn != b->conn)
    return static_cast<int>(a->conn) < static_cast<int>(b->conn) ? -1 : 1;
  if (a->left) {
    if (int c = cmp(a->left, b->left)) return c;
    if (a->right)
      if (int c = cmp(a->right, b->right)) return c;
  }
  return a->atom.compare(b->atom) < 0 ? -1 : (a->atom == b->atom ? 0 : 1);
}

namespace {

const char* head_name(Conn c) {
  switch (c) {
    case Conn::Atom: return "atom";
    case Conn::NegAtom: return "natom";
    case Conn::One: return "one";
    case Conn::Bot: return "bot";
    case Conn::Zero: return "zero";
    case Conn::Top: return "top";
    case Conn::Tensor: return "tensor";
    case Conn::Par: return "par";
    case Conn::Plus: return "plus";
    case Conn::With: return "with";
    case Conn::Bang: return "bang";
    case Conn::Quest: return "quest";
    case Conn::Up: return "up";
    case Conn::Down: return "down";
  }
  return "?";
}

void print_rec(std::string& out, const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::One:
    case Conn::Bot:
    case Conn::Zero:
    case Conn::Top:
      out += head_name(f->conn);
      return;
    case Conn::Atom:
    case Conn::NegAtom:
      out += '(';
      out += head_name(f->conn);
      out += ' ';
      out += f->atom;
      out += ')';
      return;
    default:
      out += '(';
      out += head_name(f->conn);
      out += ' ';
      print_rec(out, f->left);
      if (f->right) {
        out += ' ';
        print_rec(out, f->right);
      }
      out += ')';
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(out, f);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing. A tiny recursive-descent reader over '(' ')' and bare symbols.

namespace sexp {

Lexer::Lexer(const std::string& text) : text_(text) {}

void Lexer::skip_ws() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '\n') {
      line_++;
      col_ = 1;
      pos_++;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      col_++;
      pos_++;
    } else {
      break;
    }
  }
}

Token Lexer::peek() {
  if (!cached_) {
    cached_ = next_token();
  }
  return *cached_;
}

Token Lexer::next() {
  Token t = peek();
  cached_.reset();
  return t;
}

Token Lexer::next_token() {
  skip_ws();
  Token t;
  t.line = line_;
  t.col = col_;
  if (pos_ >= text_.size()) {
    t.kind = Token::End;
    return t;
  }
  char c = text_[pos_];
  if (c == '(') {
    pos_++;
    col_++;
    t.kind = Token::LParen;
    return t;
  }
  if (c == ')') {
    pos_++;
    col_++;
    t.kind = Token::RParen;
    return t;
  }
  t.kind = Token::Symbol;
  while (pos_ < text_.size()) {
    c = text_[pos_];
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
    t.text += c;
    pos_++;
    col_++;
  }
  return t;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.col, msg);
}

Token expect(Lexer& lx, Token::Kind k, const char* what) {
  Token t = lx.next();
  if (t.kind != k) fail(t, std::string("expected ") + what);
  return t;
}

Token expect_symbol(Lexer& lx, const char* what) {
  return expect(lx, Token::Symbol, what);
}

void expect_close(Lexer& lx) { expect(lx, Token::RParen, "')'"); }

FormulaPtr parse_formula(Lexer& lx) {
  Token t = lx.next();
  if (t.kind == Token::Symbol) {
    if (t.text == "one") return mk_one();
    if (t.text == "bot") return mk_bot();
    if (t.text == "zero") return mk_zero();
    if (t.text == "top") return mk_top();
    fail(t, "unknown formula symbol '" + t.text + "'");
  }
  if (t.kind != Token::LParen) fail(t, "expected a formula");
  Token head = expect_symbol(lx, "a connective name");
  auto finish_atom = [&](bool positive) {
    Token id = expect_symbol(lx, "an identifier");
    if (!valid_identifier(id.text)) fail(id, "invalid identifier '" + id.text + "'");
    expect_close(lx);
    return positive ? mk_atom(id.text) : mk_natom(id.text);
  };
  auto unary = [&](bool operand_positive, FormulaPtr (*mk)(const FormulaPtr&)) {
    Token at = lx.peek();
    FormulaPtr a = parse_formula(lx);
    if (is_positive(a) != operand_positive)
      fail(at, std::string(head.text) + " requires a " +
                   (operand_positive ? "positive" : "negative") + " operand");
    expect_close(lx);
    return mk(a);
  };
  auto binary = [&](bool operands_positive,
                    FormulaPtr (*mk)(const FormulaPtr&, const FormulaPtr&)) {
    Token at = lx.peek();
    FormulaPtr a = parse_formula(lx);
    if (is_positive(a) != operands_positive)
      fail(at, std::string(head.text) + " requires " +
                   (operands_positive ? "positive" : "negative") + " operands");
    Token bt = lx.peek();
    FormulaPtr b = parse_formula(lx);
    if (is_positive(b) != operands_positive)
      fail(bt, std::string(head.text) + " requires " +
                   (operands_positive ? "positive" : "negative") + " operands");
    expect_close(lx);
    return mk(a, b);
  };
  if (head.text == "atom") return finish_atom(true);
  if (head.text == "natom") return finish_atom(false);
  if (head.text == "tensor") return binary(true, mk_tensor);
  if (head.text == "plus") return binary(true, mk_plus);
  if (head.text == "par") return binary(false, mk_par);
  if (head.text == "with") return binary(false, mk_with);
  if (head.text == "bang") return unary(false, mk_bang);
  if (head.text == "up") return unary(false, mk_up);
  if (head.text == "quest") return unary(true, mk_quest);
  if (head.text == "down") return unary(true, mk_down);
  fail(head, "unknown connective '" + head.text + "'");
}

}  // namespace sexp

FormulaPtr parse_formula(const std::string& text) {
  sexp::Lexer lx(text);
  FormulaPtr f = sexp::parse_formula(lx);
  sexp::Token t = lx.next();
  if (t.kind != sexp::Token::End) sexp::fail(t, "trailing input after formula");
  return f;
}

}  // namespace llmfoc
