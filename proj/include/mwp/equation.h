// Copyright 2026 The mwp-attack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MWP_EQUATION_H_
#define MWP_EQUATION_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "mwp/rational.h"

namespace mwp {

enum class BinaryOp : char {
  kAdd = '+',
  kSub = '-',
  kMul = '*',
  kDiv = '/',
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression node: either a rational literal or a binary operator
// over two subtrees. Nodes are shared, never mutated.
class Expr {
 public:
  static ExprPtr Literal(Rational value);
  static ExprPtr Binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);

  bool is_literal() const { return !lhs_; }
  const Rational& value() const { return value_; }
  BinaryOp op() const { return op_; }
  const Expr& lhs() const { return *lhs_; }
  const Expr& rhs() const { return *rhs_; }

  // Structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  Expr() = default;

  Rational value_;
  BinaryOp op_ = BinaryOp::kAdd;
  ExprPtr lhs_;
  ExprPtr rhs_;
};

// "X = <rhs>". The unknown is implicit; only its defining expression is kept.
struct EquationAst {
  ExprPtr rhs;

  friend bool operator==(const EquationAst& a, const EquationAst& b) {
    return *a.rhs == *b.rhs;
  }
};

// Grammar:
//   equation := [ ("X" | "x") "=" ] expr
//   expr     := term { ("+" | "-") term }
//   term     := factor { ("*" | "/") factor }
//   factor   := number | "-" number | "(" expr ")"
// Throws Error(kParseError).
EquationAst ParseEquation(std::string_view text);

// Exact value of X. Throws Error(kDivisionByZero).
Rational EvaluateEquation(const EquationAst& equation);
Rational Evaluate(const Expr& expr);

// "X = 20 * (10 - 3)": canonical infix with the fewest parentheses that still
// parse back to the same tree.
std::string FormatEquation(const EquationAst& equation);
std::string FormatExpr(const Expr& expr);

inline constexpr double kDefaultAnswerTolerance = 1e-4;

// |a - b| <= tol, computed exactly.
bool AnswersEquivalent(const Rational& a, const Rational& b,
                       double tol = kDefaultAnswerTolerance);

struct GoldLabel {
  std::optional<std::string> equation;
  std::optional<Rational> answer;
};

struct SolverVerdict {
  // Present whenever the text parsed, even if evaluation then failed.
  std::optional<EquationAst> prediction;
  bool valid = false;
  std::optional<Rational> value;
  bool correct = false;
  // Parse or evaluation diagnostic when !valid.
  std::string error;
};

// Judges a raw solver output against the gold label. Any prediction text
// yields a verdict. Throws Error(kMissingGold) when the gold label is empty,
// and the gold equation's own parse/evaluation errors.
SolverVerdict Judge(std::string_view prediction, const GoldLabel& gold,
                    double tol = kDefaultAnswerTolerance);

// Gold value: the answer when present, otherwise the gold equation's value.
Rational GoldValue(const GoldLabel& gold);

}  // namespace mwp

#endif  // MWP_EQUATION_H_
