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

#include "mwp/equation.h"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "mwp/error.h"

namespace mwp {
namespace {

enum class LexKind { kNumber, kOp, kLParen, kRParen, kUnknown, kEquals, kEnd };

struct Lexeme {
  LexKind kind;
  std::string text;
  size_t offset;
};

std::vector<Lexeme> Lex(std::string_view text) {
  std::vector<Lexeme> out;
  size_t pos = 0;
  while (pos < text.size()) {
    const unsigned char c = text[pos];
    if (std::isspace(c)) {
      ++pos;
      continue;
    }
    const size_t start = pos;
    if (std::isdigit(c) || c == '.') {
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '.')) {
        ++pos;
      }
      out.push_back({LexKind::kNumber,
                     std::string(text.substr(start, pos - start)), start});
      continue;
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
        out.push_back({LexKind::kOp, std::string(1, c), start});
        break;
      case '(':
        out.push_back({LexKind::kLParen, "(", start});
        break;
      case ')':
        out.push_back({LexKind::kRParen, ")", start});
        break;
      case '=':
        out.push_back({LexKind::kEquals, "=", start});
        break;
      case 'x':
      case 'X':
        out.push_back({LexKind::kUnknown, "X", start});
        break;
      default:
        throw Error(ErrorCode::kParseError,
                    "unknown symbol '" + std::string(1, c) + "' at offset " +
                        std::to_string(start));
    }
    ++pos;
  }
  out.push_back({LexKind::kEnd, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Lexeme> lexemes)
      : lexemes_(std::move(lexemes)) {}

  EquationAst ParseEquation() {
    if (Peek().kind == LexKind::kUnknown) {
      Next();
      Expect(LexKind::kEquals, "'=' after X");
    }
    ExprPtr rhs = ParseExpr();
    if (Peek().kind != LexKind::kEnd) Fail("trailing input");
    return EquationAst{std::move(rhs)};
  }

 private:
  const Lexeme& Peek() const { return lexemes_[pos_]; }
  const Lexeme& Next() { return lexemes_[pos_++]; }

  [[noreturn]] void Fail(const std::string& what) const {
    const Lexeme& at = Peek();
    throw Error(ErrorCode::kParseError,
                what + " at offset " + std::to_string(at.offset) +
                    (at.kind == LexKind::kEnd ? " (end of input)"
                                              : " ('" + at.text + "')"));
  }

  void Expect(LexKind kind, const std::string& what) {
    if (Peek().kind != kind) Fail("expected " + what);
    Next();
  }

  bool AtOp(char op) const {
    return Peek().kind == LexKind::kOp && Peek().text[0] == op;
  }

  ExprPtr ParseExpr() {
    ExprPtr lhs = ParseTerm();
    while (AtOp('+') || AtOp('-')) {
      const auto op = static_cast<BinaryOp>(Next().text[0]);
      lhs = Expr::Binary(op, lhs, ParseTerm());
    }
    return lhs;
  }

  ExprPtr ParseTerm() {
    ExprPtr lhs = ParseFactor();
    while (AtOp('*') || AtOp('/')) {
      const auto op = static_cast<BinaryOp>(Next().text[0]);
      lhs = Expr::Binary(op, lhs, ParseFactor());
    }
    return lhs;
  }

  ExprPtr ParseFactor() {
    if (Peek().kind == LexKind::kLParen) {
      if (++depth_ > kMaxDepth) Fail("nesting too deep");
      Next();
      ExprPtr inner = ParseExpr();
      Expect(LexKind::kRParen, "')'");
      --depth_;
      return inner;
    }
    bool negative = false;
    if (AtOp('-')) {
      Next();
      negative = true;
    }
    if (Peek().kind != LexKind::kNumber) Fail("expected a number or '('");
    auto value = ParseRational(Peek().text);
    if (!value) Fail("malformed number");
    Next();
    return Expr::Literal(negative ? Rational(-*value) : *value);
  }

  static constexpr int kMaxDepth = 256;

  std::vector<Lexeme> lexemes_;
  size_t pos_ = 0;
  int depth_ = 0;
};

int Precedence(BinaryOp op) {
  return (op == BinaryOp::kAdd || op == BinaryOp::kSub) ? 1 : 2;
}

}  // namespace

ExprPtr Expr::Literal(Rational value) {
  auto node = std::shared_ptr<Expr>(new Expr());
  node->value_ = std::move(value);
  return node;
}

ExprPtr Expr::Binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  if (!lhs || !rhs) throw std::invalid_argument("Expr::Binary: null operand");
  auto node = std::shared_ptr<Expr>(new Expr());
  node->op_ = op;
  node->lhs_ = std::move(lhs);
  node->rhs_ = std::move(rhs);
  return node;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.is_literal() != b.is_literal()) return false;
  if (a.is_literal()) return a.value_ == b.value_;
  return a.op_ == b.op_ && *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
}

EquationAst ParseEquation(std::string_view text) {
  return Parser(Lex(text)).ParseEquation();
}

Rational Evaluate(const Expr& expr) {
  if (expr.is_literal()) return expr.value();
  Rational lhs = Evaluate(expr.lhs());
  Rational rhs = Evaluate(expr.rhs());
  switch (expr.op()) {
    case BinaryOp::kAdd:
      return lhs + rhs;
    case BinaryOp::kSub:
      return lhs - rhs;
    case BinaryOp::kMul:
      return lhs * rhs;
    case BinaryOp::kDiv:
      if (rhs == 0) {
        throw Error(ErrorCode::kDivisionByZero,
                    "divisor " + FormatExpr(expr.rhs()) + " is zero");
      }
      return lhs / rhs;
  }
  return 0;
}

Rational EvaluateEquation(const EquationAst& equation) {
  return Evaluate(*equation.rhs);
}

std::string FormatExpr(const Expr& expr) {
  if (expr.is_literal()) {
    std::string text = FormatRational(expr.value());
    // Negative and non-terminating literals only reparse when bracketed; the
    // latter come back as a division node.
    const bool bracket = expr.value() < 0 || text.find('/') != std::string::npos;
    return bracket ? "(" + text + ")" : text;
  }
  const int prec = Precedence(expr.op());
  auto operand = [&](const Expr& child, bool right) {
    std::string text = FormatExpr(child);
    if (child.is_literal()) return text;
    const int child_prec = Precedence(child.op());
    if (child_prec < prec || (right && child_prec == prec)) {
      return "(" + text + ")";
    }
    return text;
  };
  return operand(expr.lhs(), false) + " " + static_cast<char>(expr.op()) +
         " " + operand(expr.rhs(), true);
}

std::string FormatEquation(const EquationAst& equation) {
  return "X = " + FormatExpr(*equation.rhs);
}

bool AnswersEquivalent(const Rational& a, const Rational& b, double tol) {
  if (!(tol >= 0)) throw std::invalid_argument("tolerance must be >= 0");
  const Rational diff = a > b ? Rational(a - b) : Rational(b - a);
  return diff <= FromDouble(tol);
}

Rational GoldValue(const GoldLabel& gold) {
  if (gold.answer) return *gold.answer;
  if (gold.equation) return EvaluateEquation(ParseEquation(*gold.equation));
  throw Error(ErrorCode::kMissingGold,
              "neither gold equation nor gold answer given");
}

SolverVerdict Judge(std::string_view prediction, const GoldLabel& gold,
                    double tol) {
  const Rational expected = GoldValue(gold);
  SolverVerdict verdict;
  try {
    verdict.prediction = ParseEquation(prediction);
    verdict.value = EvaluateEquation(*verdict.prediction);
    verdict.valid = true;
    verdict.correct = AnswersEquivalent(*verdict.value, expected, tol);
  } catch (const Error& e) {
    verdict.valid = false;
    verdict.value.reset();
    verdict.correct = false;
    verdict.error = e.what();
  }
  return verdict;
}

}  // namespace mwp
