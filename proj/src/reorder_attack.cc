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

#include "mwp/reorder_attack.h"

#include <cctype>

#include "mwp/error.h"

namespace mwp {
namespace {

bool IsTerminal(const Token& token) {
  return token.IsPunct('.') || token.IsPunct('?') || token.IsPunct('!') ||
         token.IsPunct(',');
}

// Text of tokens [begin, end) with trailing terminal punctuation removed.
std::string Span(const Sentence& sentence, size_t begin, size_t end) {
  while (end > begin && IsTerminal(sentence.tokens[end - 1])) --end;
  if (end <= begin) return "";
  const size_t from = sentence.tokens[begin].begin;
  return sentence.text.substr(from, sentence.tokens[end - 1].end - from);
}

// Tokens [begin, end) re-joined without their commas.
std::string SpanWithoutCommas(const Sentence& sentence, size_t begin,
                              size_t end) {
  std::string out;
  size_t last_end = std::string::npos;
  for (size_t i = begin; i < end; ++i) {
    const Token& token = sentence.tokens[i];
    if (token.IsPunct(',')) continue;
    if (!out.empty() && token.begin != last_end) out += ' ';
    out += token.text;
    last_end = token.end;
  }
  return out;
}

void SetFirstCase(std::string& text, bool upper) {
  for (char& c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(upper ? std::toupper(static_cast<unsigned char>(c))
                                  : std::tolower(static_cast<unsigned char>(c)));
      return;
    }
    if (!std::ispunct(static_cast<unsigned char>(c))) return;
  }
}

bool StartsWithIf(const std::string& piece) {
  return piece.size() > 3 && ToLower(piece.substr(0, 3)) == "if ";
}

std::string BodyPiece(const Sentence& sentence, const NameIndex& names) {
  std::string piece = Span(sentence, 0, sentence.tokens.size());
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& token = sentence.tokens[i];
    if (token.kind == TokenKind::kPunct) continue;
    const bool keep = token.text == "I" || StripPossessive(token.text) == "I" ||
                      names.IsProperNoun(sentence, i);
    if (!keep) SetFirstCase(piece, false);
    break;
  }
  return piece;
}

}  // namespace

std::string ReorderQuestion(const MathWordProblem& problem,
                            const ReorderConfig& config) {
  if (config.connective.empty() || config.clause_joiner.empty()) {
    throw Error(ErrorCode::kInvalidConfig,
                "connective and clause joiner must be non-empty");
  }
  if (problem.body.empty()) {
    throw Error(ErrorCode::kNoBodySentences,
                "problem '" + problem.id + "' has no body sentences");
  }
  const MathWordProblem resolved =
      config.resolve_pronouns ? ResolveCoreferences(problem).problem : problem;
  const NameIndex names(resolved);
  const Sentence& question = resolved.question;

  std::string front;
  std::vector<std::string> pieces;
  for (const Sentence& sentence : resolved.body) {
    pieces.push_back(BodyPiece(sentence, names));
  }
  const auto conditional = FindLeadingConditional(question);
  if (conditional && !conditional->existential) {
    // The conditional narrates the last events; it follows the body.
    front = Span(question, conditional->main_begin_token, question.tokens.size());
    SetFirstCase(front, true);
    std::string clause = SpanWithoutCommas(question, 0, conditional->comma_token);
    SetFirstCase(clause, false);
    pieces.push_back(std::move(clause));
  } else {
    front = Span(question, 0, question.tokens.size());
  }

  std::string out = front;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].empty()) continue;
    if (i == 0) {
      // A leading "if" clause is its own connective.
      out += StartsWithIf(pieces[i]) ? " " : " " + config.connective + " ";
    } else {
      out += " " + config.clause_joiner + " ";
    }
    out += pieces[i];
  }
  out += "?";
  return out;
}

AttackResult QrAttack(const MathWordProblem& problem, SolverOracle& solver,
                      const QrOptions& options,
                      const std::optional<OriginalQuery>& original) {
  const OriginalQuery first =
      original ? *original : QueryOriginal(problem, solver, options.tolerance);
  const std::string reordered = ReorderQuestion(problem, options.reorder);
  const std::string prediction = Solve(solver, problem.id, reordered);
  const SolverVerdict verdict =
      Judge(prediction, GoldOf(problem), options.tolerance);

  AttackResult result;
  result.method = AttackMethod::kQuestionReordering;
  result.problem_id = problem.id;
  result.original_text = problem.raw_text;
  result.attempted_text = reordered;
  result.original_prediction = first.prediction;
  result.originally_correct = first.verdict.correct;
  result.queries_used = 2;
  result.search_space = 2;
  result.budget = 1;
  result.success = IsDeceiving(options.success_rule, first, prediction, verdict);
  if (result.success) {
    result.adversarial_text = reordered;
    result.adversarial_prediction = prediction;
    result.adversarial_correct = verdict.correct;
  } else {
    result.adversarial_text = problem.raw_text;
    result.adversarial_prediction = first.prediction;
    result.adversarial_correct = first.verdict.correct;
  }
  return result;
}

}  // namespace mwp
