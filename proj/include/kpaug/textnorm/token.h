// Copyright 2026 The Kpaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPAUG_TEXTNORM_TOKEN_H_
#define KPAUG_TEXTNORM_TOKEN_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kpaug {

// The three reserved surfaces that are never split, lowercased or stemmed.
struct SpecialTokens {
  std::string delimiter = "[SEP]";
  std::string mask = "[MASK]";
  std::string digit = "<digit>";

  bool IsMarker(std::string_view s) const {
    return s == delimiter || s == mask || s == digit;
  }
  bool operator==(const SpecialTokens&) const = default;
};

enum class TokenKind {
  kWord,
  kNumberPlaceholder,
  kPunctuation,
  kSpecialMarker,
};

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token&) const = default;
};

// Classifies a whitespace-free surface.
TokenKind ClassifySurface(std::string_view surface,
                          const SpecialTokens& special = {});

Token MakeToken(std::string surface, const SpecialTokens& special = {});

// A non-empty run of tokens.
struct Sentence {
  std::vector<Token> tokens;

  bool empty() const { return tokens.empty(); }
  size_t size() const { return tokens.size(); }
  bool operator==(const Sentence&) const = default;
};

// Joins surfaces with single spaces.
std::string JoinTokens(std::span<const Token> tokens);
std::string JoinSentence(const Sentence& sentence);

// ASCII punctuation as defined by the C locale.
bool IsAsciiPunct(char c);

}  // namespace kpaug

#endif  // KPAUG_TEXTNORM_TOKEN_H_
