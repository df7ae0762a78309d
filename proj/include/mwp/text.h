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

#ifndef MWP_TEXT_H_
#define MWP_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace mwp {

enum class TokenKind { kWord, kNumber, kPunct };

// A token is a byte range [begin, end) into the text it was cut from.
struct Token {
  TokenKind kind = TokenKind::kWord;
  std::string text;
  size_t begin = 0;
  size_t end = 0;

  bool IsPunct(char c) const {
    return kind == TokenKind::kPunct && text.size() == 1 && text[0] == c;
  }
  friend bool operator==(const Token&, const Token&) = default;
};

// Whitespace plus punctuation splitting. Decimals ("1.5"), digit groups
// ("1,000"), contractions and possessives ("didn't", "Mike's", including the
// typographic apostrophe) stay single tokens.
std::vector<Token> Tokenize(std::string_view text);

// Collapses whitespace runs to one space and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

std::string ToLower(std::string_view text);

bool StartsUpper(std::string_view word);

// "Mike's" -> "Mike", "boys'" -> "boys"; other words unchanged.
std::string_view StripPossessive(std::string_view word);
bool IsPossessive(std::string_view word);

// Lowercase, possessive-stripped, plural-normalized form used for
// head-entity matching ("Books" -> "book", "boxes" -> "box").
std::string Lemma(std::string_view word);

// Word and number tokens only, in order. Used when comparing texts while
// ignoring punctuation and spacing.
std::vector<std::string> ContentTokens(std::string_view text);

}  // namespace mwp

#endif  // MWP_TEXT_H_
