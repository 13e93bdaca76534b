#include "llmfoc/proof_io.hpp"

#include <functional>

#include "llmfoc/sexp.hpp"

namespace llmfoc {

namespace {

// Default principal: the first item of the required shape in the sorted
// conclusion context. A (main N) clause is only needed (and only printed)
// when a proof decomposes some later occurrence.
std::optional<size_t> default_main(const Sequent& s, Rule rule) {
  Conn want;
  bool focused;
  switch (rule) {
    case Rule::Tensor: want = Conn::Tensor; focused = true; break;
    case Rule::PlusL:
    case Rule::PlusR: want = Conn::Plus; focused = true; break;
    case Rule::Par: want = Conn::Par; focused = false; break;
    case Rule::With: want = Conn::With; focused = false; break;
    case Rule::Quest: want = Conn::Quest; focused = false; break;
    default: return std::nullopt;
  }
  for (size_t i = 0; i < s.items.size(); i++)
    if (s.items[i].focused == focused && s.items[i].f->conn == want) return i;
  return std::nullopt;
}

// Default first-premise split for the linear cuts: every focus goes left for
// cut, nothing goes left for fcut or for the lowered (inversion) form.
std::vector<size_t> default_left(const Sequent& s, Rule rule) {
  std::vector<size_t> out;
  if (rule == Rule::Cut && s.focused)
    for (size_t i = 0; i < s.items.size(); i++)
      if (s.items[i].focused) out.push_back(i);
  return out;
}

bool rule_has_main(Rule r) {
  switch (r) {
    case Rule::Tensor:
    case Rule::PlusL:
    case Rule::PlusR:
    case Rule::Par:
    case Rule::With:
    case Rule::Quest:
      return true;
    default:
      return false;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Reading

namespace {

using sexp::Lexer;
using sexp::Token;

struct RawData {
  std::optional<size_t> main;
  std::optional<std::vector<size_t>> left;
  std::optional<Formulas> copies;
  std::optional<std::vector<size_t>> theta;
  FormulaPtr cut_formula;
  std::optional<Ctx> psi;
  std::optional<Formulas> gamma;
};

size_t parse_index(Lexer& lx) {
  Token t = sexp::expect_symbol(lx, "an index");
  try {
    size_t pos = 0;
    unsigned long v = std::stoul(t.text, &pos);
    if (pos != t.text.size()) throw std::invalid_argument("");
    return static_cast<size_t>(v);
  } catch (const std::exception&) {
    sexp::fail(t, "expected a numeric index");
  }
}

std::vector<size_t> parse_indices(Lexer& lx) {
  std::vector<size_t> out;
  while (lx.peek().kind != Token::RParen) out.push_back(parse_index(lx));
  sexp::expect_close(lx);
  return out;
}

Formulas parse_formula_list(Lexer& lx, bool positive, const char* where) {
  Formulas out;
  while (lx.peek().kind != Token::RParen) {
    Token at = lx.peek();
    FormulaPtr f = sexp::parse_formula(lx);
    if (is_positive(f) != positive)
      sexp::fail(at, std::string(where) + " requires " +
                         (positive ? "positive" : "negative") + " formulas");
    out.push_back(f);
  }
  sexp::expect_close(lx);
  return out;
}

Ctx parse_item_list(Lexer& lx) {
  Ctx out;
  while (lx.peek().kind != Token::RParen) {
    Token t = lx.peek();
    if (t.kind == Token::LParen) {
      Lexer probe = lx;
      probe.next();
      Token inner = probe.peek();
      if (inner.kind == Token::Symbol && inner.text == "focus") {
        lx.next();
        lx.next();
        out.push_back(focus(sexp::parse_formula(lx)));
        sexp::expect_close(lx);
        continue;
      }
    }
    Token at = lx.peek();
    FormulaPtr f = sexp::parse_formula(lx);
    if (!is_negative(f)) sexp::fail(at, "passive items must be negative");
    out.push_back(passive(f));
  }
  sexp::expect_close(lx);
  return out;
}

// Data clauses come after the rule name and before the subderivations.
bool parse_data_clause(Lexer& lx, RawData& raw) {
  Token t = lx.peek();
  if (t.kind != Token::LParen) return false;
  Lexer probe = lx;
  probe.next();
  Token head = probe.peek();
  if (head.kind != Token::Symbol) return false;
  const std::string& k = head.text;
  if (k != "main" && k != "left" && k != "copies" && k != "theta" &&
      k != "cutformula" && k != "psi" && k != "gamma")
    return false;
  lx.next();
  lx.next();
  if (k == "main") {
    raw.main = parse_index(lx);
    sexp::expect_close(lx);
  } else if (k == "left") {
    raw.left = parse_indices(lx);
  } else if (k == "copies") {
    raw.copies = parse_formula_list(lx, true, "copies");
  } else if (k == "theta") {
    raw.theta = parse_indices(lx);
  } else if (k == "cutformula") {
    Token at = lx.peek();
    raw.cut_formula = sexp::parse_formula(lx);
    if (!is_positive(raw.cut_formula)) sexp::fail(at, "cut formula must be positive");
    sexp::expect_close(lx);
  } else if (k == "psi") {
    raw.psi = parse_item_list(lx);
  } else {
    raw.gamma = parse_formula_list(lx, false, "gamma");
  }
  return true;
}

DerivPtr parse_deriv(Lexer& lx, const Sequent& concl, Path& path) {
  Token open = sexp::expect(lx, Token::LParen, "'(' starting a derivation");
  Token head = sexp::expect_symbol(lx, "a rule name");
  auto rule = rule_from_name(head.text);
  if (!rule) sexp::fail(head, "unknown rule '" + head.text + "'");

  RawData raw;
  while (parse_data_clause(lx, raw)) {
  }

  RuleData data;
  data.main = raw.main ? raw.main : default_main(concl, *rule);
  data.left = raw.left ? *raw.left : default_left(concl, *rule);
  if (raw.copies) data.copies = sorted(*raw.copies);
  if (raw.theta) data.theta = *raw.theta;
  data.cut_formula = raw.cut_formula;
  if (raw.psi) data.acut_psi = sorted(*raw.psi);
  if (raw.gamma) data.acut_gamma = sorted(*raw.gamma);

  std::string err;
  auto prems = reconstruct_premises(concl, *rule, data, Mode::Experimental, &err);
  if (!prems) throw SchemaError(path_str(path), head.text, err);
  std::string wf = well_formed_error(concl);
  if (!wf.empty()) throw SchemaError(path_str(path), head.text, wf);

  std::vector<DerivPtr> children;
  children.reserve(prems->size());
  for (size_t i = 0; i < prems->size(); i++) {
    path.push_back(i);
    children.push_back(parse_deriv(lx, (*prems)[i], path));
    path.pop_back();
  }
  sexp::expect_close(lx);
  (void)open;

  return std::make_shared<Deriv>(
      Deriv{*rule, concl, std::move(data), std::move(children)});
}

}  // namespace

DerivPtr parse_proof(const std::string& text) {
  Lexer lx(text);
  sexp::expect(lx, Token::LParen, "'(proof'");
  Token head = sexp::expect_symbol(lx, "'proof'");
  if (head.text != "proof") sexp::fail(head, "expected 'proof'");
  Sequent root = sexp::parse_sequent(lx);
  Path path;
  DerivPtr d = parse_deriv(lx, root, path);
  sexp::expect_close(lx);
  Token t = lx.next();
  if (t.kind != Token::End) sexp::fail(t, "trailing input after proof");
  return d;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_indices(std::string& out, const char* key, const std::vector<size_t>& v) {
  out += " (";
  out += key;
  for (size_t i : v) {
    out += ' ';
    out += std::to_string(i);
  }
  out += ')';
}

void print_deriv(std::string& out, const DerivPtr& d, int indent) {
  out += '\n';
  out.append(static_cast<size_t>(indent), ' ');
  out += '(';
  out += rule_name(d->rule);
  const RuleData& data = d->data;
  if (rule_has_main(d->rule) && data.main &&
      data.main != default_main(d->concl, d->rule)) {
    out += " (main " + std::to_string(*data.main) + ')';
  }
  switch (d->rule) {
    case Rule::Tensor:
      print_indices(out, "left", data.left);
      break;
    case Rule::Decide: {
      out += " (copies";
      for (const auto& c : data.copies) {
        out += ' ';
        out += print_formula(c);
      }
      out += ')';
      print_indices(out, "theta", data.theta);
      break;
    }
    case Rule::Cut:
    case Rule::Fcut:
      out += " (cutformula " + print_formula(data.cut_formula) + ')';
      if (data.left != default_left(d->concl, d->rule))
        print_indices(out, "left", data.left);
      break;
    case Rule::CutBang:
    case Rule::FcutBang:
      out += " (cutformula " + print_formula(data.cut_formula) + ')';
      break;
    case Rule::Acut: {
      out += " (cutformula " + print_formula(data.cut_formula) + ')';
      out += " (psi";
      for (const auto& it : data.acut_psi) {
        out += ' ';
        if (it.focused)
          out += "(focus " + print_formula(it.f) + ')';
        else
          out += print_formula(it.f);
      }
      out += ')';
      out += " (gamma";
      for (const auto& g : data.acut_gamma) {
        out += ' ';
        out += print_formula(g);
      }
      out += ')';
      break;
    }
    default:
      break;
  }
  for (const auto& p : d->prems) print_deriv(out, p, indent + 2);
  out += ')';
}

}  // namespace

std::string print_proof(const DerivPtr& d) {
  std::string out = "(proof ";
  out += print_sequent(d->concl);
  print_deriv(out, d, 2);
  out += ")\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON mirrors

nlohmann::json formula_to_json(const FormulaPtr& f) {
  nlohmann::json j;
  switch (f->conn) {
    case Conn::Atom: return {{"conn", "atom"}, {"name", f->atom}};
    case Conn::NegAtom: return {{"conn", "natom"}, {"name", f->atom}};
    case Conn::One: return {{"conn", "one"}};
    case Conn::Bot: return {{"conn", "bot"}};
    case Conn::Zero: return {{"conn", "zero"}};
    case Conn::Top: return {{"conn", "top"}};
    case Conn::Tensor: j["conn"] = "tensor"; break;
    case Conn::Par: j["conn"] = "par"; break;
    case Conn::Plus: j["conn"] = "plus"; break;
    case Conn::With: j["conn"] = "with"; break;
    case Conn::Bang: j["conn"] = "bang"; break;
    case Conn::Quest: j["conn"] = "quest"; break;
    case Conn::Up: j["conn"] = "up"; break;
    case Conn::Down: j["conn"] = "down"; break;
  }
  auto args = nlohmann::json::array();
  args.push_back(formula_to_json(f->left));
  if (f->right) args.push_back(formula_to_json(f->right));
  j["args"] = args;
  return j;
}

nlohmann::json sequent_to_json(const Sequent& s) {
  nlohmann::json j;
  j["judgment"] = s.focused ? "foc" : "inv";
  auto per = nlohmann::json::array();
  for (const auto& p : s.per) per.push_back(formula_to_json(p));
  j["per"] = per;
  auto ctx = nlohmann::json::array();
  for (const auto& it : s.items)
    ctx.push_back(nlohmann::json{{"focus", it.focused},
                                 {"formula", formula_to_json(it.f)}});
  j["ctx"] = ctx;
  return j;
}

static nlohmann::json deriv_to_json(const DerivPtr& d) {
  nlohmann::json j;
  j["rule"] = rule_name(d->rule);
  const RuleData& data = d->data;
  if (rule_has_main(d->rule) && data.main) j["main"] = *data.main;
  switch (d->rule) {
    case Rule::Tensor:
    case Rule::Cut:
    case Rule::Fcut:
      j["left"] = data.left;
      break;
    default:
      break;
  }
  if (d->rule == Rule::Decide) {
    auto copies = nlohmann::json::array();
    for (const auto& c : data.copies) copies.push_back(formula_to_json(c));
    j["copies"] = copies;
    j["theta"] = data.theta;
  }
  if (data.cut_formula) j["cutformula"] = formula_to_json(data.cut_formula);
  if (d->rule == Rule::Acut) {
    auto psi = nlohmann::json::array();
    for (const auto& it : data.acut_psi)
      psi.push_back(nlohmann::json{{"focus", it.focused},
                                   {"formula", formula_to_json(it.f)}});
    j["psi"] = psi;
    auto gamma = nlohmann::json::array();
    for (const auto& g : data.acut_gamma) gamma.push_back(formula_to_json(g));
    j["gamma"] = gamma;
  }
  auto prems = nlohmann::json::array();
  for (const auto& p : d->prems) prems.push_back(deriv_to_json(p));
  j["premises"] = prems;
  return j;
}

nlohmann::json proof_to_json(const DerivPtr& d) {
  return {{"sequent", sequent_to_json(d->concl)}, {"deriv", deriv_to_json(d)}};
}

nlohmann::json report_to_json(const ValidityReport& r) {
  nlohmann::json j;
  j["ok"] = r.ok;
  auto vs = nlohmann::json::array();
  for (const auto& v : r.violations)
    vs.push_back(nlohmann::json{{"path", path_str(v.path)},
                                {"rule", rule_name(v.rule)},
                                {"message", v.message}});
  j["violations"] = vs;
  return j;
}

}  // namespace llmfoc
