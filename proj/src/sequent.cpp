#include "llmfoc/sequent.hpp"

#include "llmfoc/sexp.hpp"

namespace llmfoc {

Sequent mk_inv(Formulas per, Formulas ctx) {
  Sequent s;
  s.focused = false;
  s.per = sorted(std::move(per));
  s.items = as_passives(sorted(std::move(ctx)));
  return s;
}

Sequent mk_foc(Formulas per, Ctx items) {
  Sequent s;
  s.focused = true;
  s.per = sorted(std::move(per));
  s.items = sorted(std::move(items));
  return s;
}

bool equal(const Sequent& a, const Sequent& b) {
  return a.focused == b.focused && equal(a.per, b.per) && equal(a.items, b.items);
}

std::string well_formed_error(const Sequent& s) {
  for (const auto& p : s.per)
    if (!is_positive(p)) return "sequent: persistent context must hold positives";
  for (const auto& it : s.items) {
    if (it.focused && !is_positive(it.f)) return "sequent: focus on a negative formula";
    if (!it.focused && !is_negative(it.f)) return "sequent: passive positive formula";
  }
  if (!s.focused && focus_count(s.items) > 0)
    return "sequent: inversion context cannot hold a focus";
  if (s.focused && focus_count(s.items) == 0)
    return "sequent: focused context must contain at least one focus";
  return "";
}

std::string print_sequent(const Sequent& s) {
  std::string out = s.focused ? "(foc (per" : "(inv (per";
  for (const auto& p : s.per) {
    out += ' ';
    out += print_formula(p);
  }
  out += ") (ctx";
  for (const auto& it : s.items) {
    out += ' ';
    if (it.focused) {
      out += "(focus ";
      out += print_formula(it.f);
      out += ')';
    } else {
      out += print_formula(it.f);
    }
  }
  out += "))";
  return out;
}

namespace sexp {

static FormulaPtr parse_checked(Lexer& lx, bool positive, const char* where) {
  Token at = lx.peek();
  FormulaPtr f = parse_formula(lx);
  if (is_positive(f) != positive)
    fail(at, std::string(where) + " requires a " +
                 (positive ? "positive" : "negative") + " formula");
  return f;
}

Sequent parse_sequent(Lexer& lx) {
  Token open = expect(lx, Token::LParen, "'('");
  Token head = expect_symbol(lx, "'inv' or 'foc'");
  bool focused;
  if (head.text == "inv")
    focused = false;
  else if (head.text == "foc")
    focused = true;
  else
    fail(head, "expected 'inv' or 'foc'");

  expect(lx, Token::LParen, "'(per'");
  Token ph = expect_symbol(lx, "'per'");
  if (ph.text != "per") fail(ph, "expected 'per'");
  Formulas per;
  while (lx.peek().kind != Token::RParen)
    per.push_back(parse_checked(lx, true, "persistent context"));
  expect_close(lx);

  expect(lx, Token::LParen, "'(ctx'");
  Token ch = expect_symbol(lx, "'ctx'");
  if (ch.text != "ctx") fail(ch, "expected 'ctx'");
  Ctx items;
  while (lx.peek().kind != Token::RParen) {
    Token t = lx.peek();
    if (t.kind == Token::LParen) {
      // Could be (focus F) or a compound formula.
      Lexer probe = lx;  // cheap: lexer is a cursor over the same string
      probe.next();
      Token inner = probe.peek();
      if (inner.kind == Token::Symbol && inner.text == "focus") {
        lx.next();
        lx.next();
        if (!focused) fail(inner, "inversion context cannot hold a focus");
        items.push_back(focus(parse_checked(lx, true, "focus")));
        expect_close(lx);
        continue;
      }
    }
    items.push_back(passive(parse_checked(lx, false, "context")));
  }
  expect_close(lx);
  expect_close(lx);
  (void)open;

  Sequent s;
  s.focused = focused;
  s.per = sorted(std::move(per));
  s.items = sorted(std::move(items));
  return s;
}

}  // namespace sexp

Sequent parse_sequent(const std::string& text) {
  sexp::Lexer lx(text);
  Sequent s = sexp::parse_sequent(lx);
  sexp::Token t = lx.next();
  if (t.kind != sexp::Token::End) sexp::fail(t, "trailing input after sequent");
  return s;
}

}  // namespace llmfoc
