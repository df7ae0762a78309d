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

#include "mwp/text.h"

#include <algorithm>
#include <cctype>

namespace mwp {
namespace {

bool IsAsciiAlpha(unsigned char c) { return std::isalpha(c); }
bool IsAsciiDigit(unsigned char c) { return std::isdigit(c); }
bool IsSpace(unsigned char c) { return std::isspace(c); }

// Typographic punctuation that should not glue onto words.
constexpr std::string_view kRightQuote = "\xE2\x80\x99";
constexpr std::string_view kPunctSequences[] = {
    "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98", "\xE2\x80\x93",
    "\xE2\x80\x94", "\xE2\x80\xA6",
};

size_t TypographicPunctAt(std::string_view text, size_t pos) {
  for (std::string_view seq : kPunctSequences) {
    if (text.substr(pos, seq.size()) == seq) return seq.size();
  }
  return 0;
}

bool IsWordByte(std::string_view text, size_t pos) {
  const unsigned char c = text[pos];
  if (IsAsciiAlpha(c) || IsAsciiDigit(c)) return true;
  if (c < 0x80) return false;
  return TypographicPunctAt(text, pos) == 0 &&
         text.substr(pos, kRightQuote.size()) != kRightQuote;
}

// Length of an apostrophe at pos that joins two word parts, else 0.
size_t InnerApostropheAt(std::string_view text, size_t pos) {
  size_t len = 0;
  if (text[pos] == '\'') {
    len = 1;
  } else if (text.substr(pos, kRightQuote.size()) == kRightQuote) {
    len = kRightQuote.size();
  } else {
    return 0;
  }
  if (pos + len < text.size() && IsAsciiAlpha(text[pos + len])) return len;
  // Plural possessive: "boys' toys".
  if (pos > 0 && (text[pos - 1] == 's' || text[pos - 1] == 'S') &&
      (pos + len == text.size() || IsSpace(text[pos + len]))) {
    return len;
  }
  return 0;
}

size_t ScanNumber(std::string_view text, size_t pos) {
  size_t end = pos;
  size_t group = 0;
  while (end < text.size()) {
    if (IsAsciiDigit(text[end])) {
      ++end;
      ++group;
    } else if (text[end] == ',' && group > 0 && group <= 3 &&
               end + 3 < text.size() && IsAsciiDigit(text[end + 1]) &&
               IsAsciiDigit(text[end + 2]) && IsAsciiDigit(text[end + 3]) &&
               (end + 4 == text.size() || !IsAsciiDigit(text[end + 4]))) {
      end += 4;
      group = 3;
    } else {
      break;
    }
  }
  if (end + 1 < text.size() && text[end] == '.' && IsAsciiDigit(text[end + 1])) {
    ++end;
    while (end < text.size() && IsAsciiDigit(text[end])) ++end;
  }
  return end;
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < text.size()) {
    const unsigned char c = text[pos];
    if (IsSpace(c)) {
      ++pos;
      continue;
    }
    const size_t start = pos;
    const bool leading_point = c == '.' && pos + 1 < text.size() &&
                               IsAsciiDigit(text[pos + 1]) &&
                               (pos == 0 || !IsAsciiDigit(text[pos - 1]));
    if (IsAsciiDigit(c) || leading_point) {
      pos = ScanNumber(text, pos);
      if (pos < text.size() && IsAsciiAlpha(text[pos])) {
        // "5th", "2nd": ordinals and unit-glued forms are words.
        while (pos < text.size() && IsWordByte(text, pos)) ++pos;
        tokens.push_back({TokenKind::kWord, std::string(text.substr(start, pos - start)), start, pos});
      } else {
        tokens.push_back({TokenKind::kNumber, std::string(text.substr(start, pos - start)), start, pos});
      }
      continue;
    }
    if (IsWordByte(text, pos)) {
      while (pos < text.size()) {
        if (IsWordByte(text, pos)) {
          ++pos;
        } else if (size_t len = InnerApostropheAt(text, pos); len > 0) {
          pos += len;
        } else if (text[pos] == '-' && pos + 1 < text.size() &&
                   IsWordByte(text, pos + 1)) {
          ++pos;
        } else {
          break;
        }
      }
      tokens.push_back({TokenKind::kWord, std::string(text.substr(start, pos - start)), start, pos});
      continue;
    }
    size_t len = TypographicPunctAt(text, pos);
    if (len == 0 && text.substr(pos, kRightQuote.size()) == kRightQuote) {
      len = kRightQuote.size();
    }
    if (len == 0 && c >= 0x80) {
      // Unknown multi-byte sequence: keep the whole UTF-8 code point.
      len = 1;
      while (pos + len < text.size() &&
             (static_cast<unsigned char>(text[pos + len]) & 0xC0) == 0x80) {
        ++len;
      }
    }
    if (len == 0) len = 1;
    pos += len;
    tokens.push_back({TokenKind::kPunct, std::string(text.substr(start, len)), start, pos});
  }
  return tokens;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool StartsUpper(std::string_view word) {
  return !word.empty() && std::isupper(static_cast<unsigned char>(word[0]));
}

bool IsPossessive(std::string_view word) {
  return StripPossessive(word).size() != word.size();
}

std::string_view StripPossessive(std::string_view word) {
  for (std::string_view suffix : {std::string_view("'s"), std::string_view("\xE2\x80\x99s"),
                                  std::string_view("'S")}) {
    if (word.size() > suffix.size() && word.ends_with(suffix)) {
      return word.substr(0, word.size() - suffix.size());
    }
  }
  for (std::string_view suffix : {std::string_view("'"), kRightQuote}) {
    if (word.size() > suffix.size() + 1 && word.ends_with(suffix) &&
        (word[word.size() - suffix.size() - 1] == 's')) {
      return word.substr(0, word.size() - suffix.size());
    }
  }
  return word;
}

std::string Lemma(std::string_view word) {
  std::string lower = ToLower(StripPossessive(word));
  auto ends = [&](std::string_view suffix) { return lower.ends_with(suffix); };
  const size_t n = lower.size();
  if (n > 4 && ends("ies")) {
    lower.replace(n - 3, 3, "y");
  } else if (n > 4 && (ends("sses") || ends("ches") || ends("shes") ||
                       ends("xes") || ends("zes"))) {
    lower.resize(n - 2);
  } else if (n > 3 && ends("s") && !ends("ss") && !ends("us") && !ends("is")) {
    lower.resize(n - 1);
  }
  return lower;
}

std::vector<std::string> ContentTokens(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& token : Tokenize(text)) {
    if (token.kind != TokenKind::kPunct) out.push_back(token.text);
  }
  return out;
}

}  // namespace mwp
