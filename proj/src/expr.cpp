#include "qloc/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>

#include "qloc/errors.hpp"
#include "qloc/frames.hpp"
#include "qloc/observables.hpp"

namespace qloc::expr {

namespace {

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& e : s) out += (out.empty() ? "" : ", ") + e;
  return out;
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, nat, punct, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    std::size_t j = i;
    Tok kind;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      kind = Tok::ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      kind = Tok::nat;
    } else if (std::string("+-*^/()[],;=").find(c) != std::string::npos) {
      j = i + 1;
      kind = Tok::punct;
    } else {
      throw ParseError(line, col, {"expression"}, std::string(1, c));
    }
    out.push_back({kind, s.substr(i, j - i), line, col});
    col += static_cast<int>(j - i);
    i = j;
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Name tables

struct FunctionSig {
  int operands;
  int integers;
  bool integer_is_index;
  bool takes_order;
};

const std::map<std::string, FunctionSig>& functions() {
  static const std::map<std::string, FunctionSig> f = {
      {"comm", {2, 0, false, false}},    {"dot", {2, 0, false, false}},
      {"adj", {1, 0, false, false}},     {"conj", {1, 0, false, true}},
      {"conjinv", {1, 0, false, true}},  {"pow", {1, 1, false, false}},
      {"adn", {1, 1, false, false}},     {"trunc", {1, 1, false, false}},
      {"alphapart", {1, 1, false, false}}, {"dx", {1, 1, true, false}},
      {"dxl", {1, 1, true, false}},      {"subX", {1, 0, false, false}},
      {"subXleft", {1, 0, false, false}}, {"coeff", {2, 0, false, false}},
  };
  return f;
}

const std::map<std::string, int>& builtins() {
  static const std::map<std::string, int> b = {
      {"i", 0},      {"hbar", 0},  {"P2", 0},     {"Minv2", 0},     {"alpha2", 0},
      {"alphax", 0}, {"alphaX", 0}, {"lambdainv", 0}, {"lambda", 0}, {"alpha", 1},
      {"alphal", 1}, {"p", 1},     {"eta", 2},    {"vierbein", 2},
  };
  return b;
}

std::optional<int> identifier_arity(const std::string& name) {
  if (auto it = builtins().find(name); it != builtins().end()) return it->second;
  try {
    return obs::arity(name);
  } catch (const UnknownObservable&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (peek().kind != Tok::end) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(const char* p) const { return peek().kind == Tok::punct && peek().text == p; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected),
                     t.kind == Tok::end ? "end of input" : t.text);
  }

  void expect(const char* p) {
    if (!at(p)) fail({std::string("'") + p + "'"});
    ++pos_;
  }

  long long number(const std::string& what) {
    if (peek().kind != Tok::nat || peek().text.size() > 18) fail({what});
    return std::stoll(toks_[pos_++].text);
  }

  int nat(const std::string& what) {
    if (peek().kind != Tok::nat || peek().text.size() > 6) fail({what});
    return std::stoi(toks_[pos_++].text);
  }

  int index() {
    int v = nat("index 0..3");
    if (v > 3) {
      pos_--;
      fail({"index 0..3"});
    }
    return v;
  }

  static ExprPtr at_pos(Expr e, const Token& t) {
    e.line = t.line;
    e.column = t.column;
    return std::make_shared<const Expr>(std::move(e));
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (at("+") || at("-")) {
      const Token op = peek();
      ++pos_;
      Expr e;
      e.kind = op.text == "+" ? Expr::Kind::sum : Expr::Kind::difference;
      e.args = {lhs, parse_term()};
      e.line = lhs->line;
      e.column = lhs->column;
      lhs = std::make_shared<const Expr>(std::move(e));
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (at("*")) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::product;
      e.args = {lhs, parse_factor()};
      e.line = lhs->line;
      e.column = lhs->column;
      lhs = std::make_shared<const Expr>(std::move(e));
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    const Token start = peek();
    ExprPtr base;
    if (at("-")) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::neg;
      e.args = {parse_atom()};
      base = at_pos(std::move(e), start);
    } else {
      base = parse_atom();
    }
    if (at("^")) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::power;
      e.exponent = nat("exponent");
      e.args = {base};
      base = at_pos(std::move(e), start);
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token t = peek();
    if (t.kind == Tok::nat) {
      long long num = number("number");
      long long den = 1;
      if (at("/")) {
        ++pos_;
        den = number("denominator");
        if (den == 0) {
          pos_--;
          fail({"nonzero denominator"});
        }
      }
      Expr e;
      e.kind = Expr::Kind::number;
      e.value = Rational(num, den);
      return at_pos(std::move(e), t);
    }
    if (at("(")) {
      ++pos_;
      ExprPtr inner = parse_expr();
      expect(")");
      return inner;
    }
    if (t.kind == Tok::ident) {
      ++pos_;
      if (auto f = functions().find(t.text); f != functions().end()) return parse_call(t, f->second);
      auto arity = identifier_arity(t.text);
      if (!arity) {
        pos_--;
        fail({"observable or builtin name"});
      }
      Expr e;
      e.kind = Expr::Kind::ref;
      e.name = t.text;
      if (*arity > 0) {
        expect("[");
        for (int k = 0; k < *arity; ++k) {
          if (k > 0) expect(",");
          e.indices.push_back(index());
        }
        expect("]");
      }
      return at_pos(std::move(e), t);
    }
    fail({"number", "identifier", "'('"});
  }

  ExprPtr parse_call(const Token& t, const FunctionSig& sig) {
    Expr e;
    e.kind = Expr::Kind::call;
    e.name = t.text;
    expect("(");
    for (int k = 0; k < sig.operands; ++k) {
      if (k > 0) expect(",");
      e.args.push_back(parse_expr());
    }
    for (int k = 0; k < sig.integers; ++k) {
      expect(",");
      e.indices.push_back(sig.integer_is_index ? index() : nat("natural number"));
    }
    if (sig.takes_order && at(";")) {
      ++pos_;
      if (peek().kind != Tok::ident || peek().text != "order") fail({"'order'"});
      ++pos_;
      expect("=");
      e.order = nat("natural number");
    }
    if (!at(")")) {
      std::set<std::string> want = {"')'"};
      if (sig.takes_order && !e.order) want.insert("';'");
      fail(want);
    }
    ++pos_;
    return at_pos(std::move(e), t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Renderer

bool is_atom(const Expr& e) {
  return e.kind == Expr::Kind::number || e.kind == Expr::Kind::ref || e.kind == Expr::Kind::call;
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string render_atom(const Expr& e) { return is_atom(e) ? render(e) : paren(render(e)); }

bool is_factor(const Expr& e) {
  return is_atom(e) || e.kind == Expr::Kind::neg || e.kind == Expr::Kind::power;
}

// ---------------------------------------------------------------------------
// Evaluator

std::array<NCElement, 4> hermitian_positions() {
  return {obs::hermitian_position(0), obs::hermitian_position(1), obs::hermitian_position(2),
          obs::hermitian_position(3)};
}

NCElement eval_ref(const Expr& e, const EvalConfig& cfg) {
  const std::string& n = e.name;
  const auto& ix = e.indices;
  if (n == "i") return NCElement(Scalar::i());
  if (n == "hbar") return NCElement(Scalar::hbar());
  if (n == "P2") return obs::momentum_square();
  if (n == "Minv2") return NCElement(Scalar::w_pow(-2));
  if (n == "alpha2") return frames::alpha_square();
  if (n == "alphax") {
    return frames::alpha_dot({obs::position(0), obs::position(1), obs::position(2), obs::position(3)});
  }
  if (n == "alphaX") return frames::alpha_dot(hermitian_positions());
  if (n == "lambdainv") return frames::conformal_factor_inv();
  if (n == "lambda") return frames::conformal_factor(cfg.order);
  if (n == "alpha") return NCElement(Scalar::alpha(ix[0]));
  if (n == "alphal") return frames::alpha_lower(ix[0]);
  if (n == "p") return NCElement(Scalar::p(ix[0]));
  if (n == "eta") return NCElement(Scalar(eta(ix[0], ix[1])));
  if (n == "vierbein") return frames::vierbein(cfg.order)[ix[0]][ix[1]];
  return obs::build(n, ix);
}

NCElement eval_call(const Expr& e, const EvalConfig& cfg) {
  auto arg = [&](int k) { return eval(*e.args[k], cfg); };
  const std::string& n = e.name;
  if (n == "comm") return bracket(arg(0), arg(1));
  if (n == "dot") return dot(arg(0), arg(1));
  if (n == "adj") return adjoint(arg(0));
  if (n == "conj") return frames::conjugate(arg(0), e.order.value_or(cfg.order));
  if (n == "conjinv") return frames::conjugate_inverse(arg(0), e.order.value_or(cfg.order));
  if (n == "pow") return power(arg(0), e.indices[0]);
  if (n == "adn") return frames::adn(arg(0), e.indices[0]);
  if (n == "trunc") return arg(0).alpha_truncate(e.indices[0]);
  if (n == "alphapart") return arg(0).alpha_part(e.indices[0]);
  if (n == "dx") return arg(0).dx_upper(e.indices[0]);
  if (n == "dxl") return arg(0).dx_lower(e.indices[0]);
  if (n == "subX") return poly_eval_sym(arg(0), hermitian_positions());
  if (n == "subXleft") return poly_eval_left(arg(0), hermitian_positions());
  if (n == "coeff") {
    NCElement a = arg(0);
    NCElement b = arg(1);
    auto c = unit_ratio(a, b);
    if (!c) throw EvalError(e.line, e.column, "coeff: first argument is not a unit multiple of the second");
    return NCElement(*c);
  }
  throw EvalError(e.line, e.column, "unknown function " + n);
}

}  // namespace

ParseError::ParseError(int line, int column, std::set<std::string> expected, const std::string& found)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": expected " + join(expected) + ", found '" + found + "'"),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(found) {}

std::string ParseError::detail() const {
  return "expected " + join(expected_) + ", found '" + found_ + "'";
}

EvalError::EvalError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.indices != b.indices ||
      a.exponent != b.exponent || a.order != b.order || a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.args.size(); ++k) {
    if (!(*a.args[k] == *b.args[k])) return false;
  }
  return true;
}

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return e.value.str();
    case Expr::Kind::ref: {
      std::string s = e.name;
      if (!e.indices.empty()) {
        s += "[";
        for (std::size_t k = 0; k < e.indices.size(); ++k) {
          s += (k ? "," : "") + std::to_string(e.indices[k]);
        }
        s += "]";
      }
      return s;
    }
    case Expr::Kind::call: {
      std::string s = e.name + "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? ", " : "") + render(*e.args[k]);
      for (int v : e.indices) s += ", " + std::to_string(v);
      if (e.order) s += "; order=" + std::to_string(*e.order);
      return s + ")";
    }
    case Expr::Kind::neg:
      return "-" + render_atom(*e.args[0]);
    case Expr::Kind::power: {
      const Expr& base = *e.args[0];
      std::string b = base.kind == Expr::Kind::neg && is_atom(*base.args[0]) ? render(base)
                                                                             : render_atom(base);
      return b + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::product: {
      const Expr& l = *e.args[0];
      const Expr& r = *e.args[1];
      std::string ls = (is_factor(l) || l.kind == Expr::Kind::product) ? render(l) : paren(render(l));
      std::string rs = is_factor(r) ? render(r) : paren(render(r));
      return ls + "*" + rs;
    }
    case Expr::Kind::sum:
    case Expr::Kind::difference: {
      const Expr& r = *e.args[1];
      bool r_term = is_factor(r) || r.kind == Expr::Kind::product;
      return render(*e.args[0]) + (e.kind == Expr::Kind::sum ? " + " : " - ") +
             (r_term ? render(r) : paren(render(r)));
    }
  }
  return {};
}

ExprPtr make_number(Rational v) {
  Expr e;
  e.kind = Expr::Kind::number;
  e.value = v;
  return std::make_shared<const Expr>(std::move(e));
}

ExprPtr make_neg(ExprPtr a) {
  Expr e;
  e.kind = Expr::Kind::neg;
  e.line = a->line;
  e.column = a->column;
  e.args = {std::move(a)};
  return std::make_shared<const Expr>(std::move(e));
}

ExprPtr make_binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = kind;
  e.line = a->line;
  e.column = a->column;
  e.args = {std::move(a), std::move(b)};
  return std::make_shared<const Expr>(std::move(e));
}

ExprPtr make_call(const std::string& name, std::vector<ExprPtr> args) {
  Expr e;
  e.kind = Expr::Kind::call;
  e.name = name;
  if (!args.empty()) {
    e.line = args[0]->line;
    e.column = args[0]->column;
  }
  e.args = std::move(args);
  return std::make_shared<const Expr>(std::move(e));
}

int default_order() {
  if (const char* env = std::getenv("QLOC_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 64) return static_cast<int>(v);
  }
  return 3;
}

NCElement eval(const Expr& e, const EvalConfig& cfg) {
  try {
    switch (e.kind) {
      case Expr::Kind::number:
        return NCElement(Scalar(Gaussian(e.value)));
      case Expr::Kind::ref:
        return eval_ref(e, cfg);
      case Expr::Kind::call:
        return eval_call(e, cfg);
      case Expr::Kind::neg:
        return -eval(*e.args[0], cfg);
      case Expr::Kind::power:
        return power(eval(*e.args[0], cfg), e.exponent);
      case Expr::Kind::product:
        return eval(*e.args[0], cfg) * eval(*e.args[1], cfg);
      case Expr::Kind::sum:
        return eval(*e.args[0], cfg) + eval(*e.args[1], cfg);
      case Expr::Kind::difference:
        return eval(*e.args[0], cfg) - eval(*e.args[1], cfg);
    }
  } catch (const EvalError&) {
    throw;
  } catch (const std::exception& ex) {
    throw EvalError(e.line, e.column, ex.what());
  }
  return {};
}

NCElement eval(const std::string& text, const EvalConfig& cfg) { return eval(*parse(text), cfg); }

std::vector<std::string> identifier_names() {
  std::set<std::string> names(obs::catalog_names().begin(), obs::catalog_names().end());
  for (const auto& [k, v] : builtins()) names.insert(k);
  return {names.begin(), names.end()};
}

std::vector<std::string> function_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : functions()) out.push_back(k);
  return out;
}

}  // namespace qloc::expr
