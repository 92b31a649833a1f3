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

#include "kpaug/textnorm/token.h"

#include <algorithm>
#include <cctype>

namespace kpaug {

bool IsAsciiPunct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

TokenKind ClassifySurface(std::string_view surface,
                          const SpecialTokens& special) {
  if (surface == special.digit) return TokenKind::kNumberPlaceholder;
  if (special.IsMarker(surface)) return TokenKind::kSpecialMarker;
  if (!surface.empty() &&
      std::all_of(surface.begin(), surface.end(), IsAsciiPunct)) {
    return TokenKind::kPunctuation;
  }
  return TokenKind::kWord;
}

Token MakeToken(std::string surface, const SpecialTokens& special) {
  const TokenKind kind = ClassifySurface(surface, special);
  return Token{std::move(surface), kind};
}

std::string JoinTokens(std::span<const Token> tokens) {
  std::string out;
  for (const Token& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token.surface;
  }
  return out;
}

std::string JoinSentence(const Sentence& sentence) {
  return JoinTokens(sentence.tokens);
}

}  // namespace kpaug
