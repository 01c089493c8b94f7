#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloc/ncalg.hpp"

namespace qloc::expr {

/// Syntax error at a 1-based line/column; `expected` lists the acceptable tokens.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::set<std::string> expected, const std::string& found);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  /// "expected ..., found '...'" without the position prefix.
  std::string detail() const;

 private:
  int line_;
  int column_;
  std::set<std::string> expected_;
  std::string found_;
};

/// Evaluation failure, tagged with the start of the offending sub-expression.
class EvalError : public std::runtime_error {
 public:
  EvalError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, ref, call, neg, power, product, sum, difference };

  Kind kind = Kind::number;
  Rational value;                // number
  std::string name;              // ref, call
  std::vector<int> indices;      // ref indices; integer arguments of a call
  std::vector<ExprPtr> args;     // operands
  int exponent = 0;              // power
  std::optional<int> order;      // conj, conjinv
  int line = 1;
  int column = 1;

  /// Structural equality, ignoring source positions.
  friend bool operator==(const Expr& a, const Expr& b);
};

ExprPtr parse(const std::string& text);

/// Plain rendering in the input grammar; parse(render(e)) == e.
std::string render(const Expr& e);

ExprPtr make_number(Rational v);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_binary(Expr::Kind kind, ExprPtr a, ExprPtr b);
ExprPtr make_call(const std::string& name, std::vector<ExprPtr> args);

struct EvalConfig {
  int order = 3;
};

/// Default truncation order: $QLOC_ORDER when set, else 3.
int default_order();

NCElement eval(const Expr& e, const EvalConfig& config = {});
NCElement eval(const std::string& text, const EvalConfig& config = {});

/// Names accepted as identifiers (catalog and builtins), sorted.
std::vector<std::string> identifier_names();
std::vector<std::string> function_names();

}  // namespace qloc::expr
