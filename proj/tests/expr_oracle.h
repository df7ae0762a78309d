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

// Random arithmetic trees with a reference evaluator that shares no code
// with the library.

#ifndef MWP_TESTS_EXPR_ORACLE_H_
#define MWP_TESTS_EXPR_ORACLE_H_

#include <memory>
#include <optional>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mwp::oracle {

using Exact = boost::multiprecision::cpp_rational;

struct Node {
  char op = 0;  // 0 for a literal
  int literal = 0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

// Literals uniform in 1..9; each internal node splits with probability 2/3
// until `depth` runs out.
inline std::unique_ptr<Node> RandomTree(std::mt19937_64& rng, int depth) {
  auto node = std::make_unique<Node>();
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth == 0 || coin(rng) == 0) {
    node->literal = std::uniform_int_distribution<int>(1, 9)(rng);
    return node;
  }
  node->op = "+-*/"[std::uniform_int_distribution<int>(0, 3)(rng)];
  node->lhs = RandomTree(rng, depth - 1);
  node->rhs = RandomTree(rng, depth - 1);
  return node;
}

// nullopt on division by zero.
inline std::optional<Exact> Reference(const Node& n) {
  if (n.op == 0) return Exact(n.literal);
  const auto a = Reference(*n.lhs);
  const auto b = Reference(*n.rhs);
  if (!a || !b) return std::nullopt;
  switch (n.op) {
    case '+':
      return Exact(*a + *b);
    case '-':
      return Exact(*a - *b);
    case '*':
      return Exact(*a * *b);
    default:
      if (*b == 0) return std::nullopt;
      return Exact(*a / *b);
  }
}

// Fully parenthesized infix.
inline std::string Render(const Node& n) {
  if (n.op == 0) return std::to_string(n.literal);
  return "(" + Render(*n.lhs) + " " + n.op + " " + Render(*n.rhs) + ")";
}

}  // namespace mwp::oracle

#endif  // MWP_TESTS_EXPR_ORACLE_H_
