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

#include "kpaug/textnorm/tokenizer.h"

#include <cctype>
#include <string>

namespace kpaug {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// Finds the earliest marker occurrence in `text` starting at `from`. Returns
// npos when there is none; `length` receives the marker length.
size_t FindMarker(std::string_view text, size_t from,
                  const SpecialTokens& special, size_t* length) {
  size_t best = std::string_view::npos;
  for (const std::string* marker :
       {&special.delimiter, &special.mask, &special.digit}) {
    if (marker->empty()) continue;
    const size_t pos = text.find(*marker, from);
    if (pos < best || (pos == best && marker->size() > *length)) {
      best = pos;
      *length = marker->size();
    }
  }
  return best;
}

// Tokenizes a marker-free piece: edge punctuation is peeled off one
// character at a time.
void TokenizePiece(std::string_view piece, const SpecialTokens& special,
                   std::vector<Token>* out) {
  size_t begin = 0;
  size_t end = piece.size();
  while (begin < end && IsAsciiPunct(piece[begin])) {
    out->push_back(MakeToken(std::string(1, piece[begin]), special));
    ++begin;
  }
  std::vector<Token> trailing;
  while (end > begin && IsAsciiPunct(piece[end - 1])) {
    trailing.push_back(MakeToken(std::string(1, piece[end - 1]), special));
    --end;
  }
  if (begin < end) {
    out->push_back(MakeToken(std::string(piece.substr(begin, end - begin)),
                             special));
  }
  out->insert(out->end(), trailing.rbegin(), trailing.rend());
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text,
                            const SpecialTokens& special) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && !IsSpace(text[j])) ++j;
    std::string_view chunk = text.substr(i, j - i);
    size_t pos = 0;
    while (pos < chunk.size()) {
      size_t length = 0;
      const size_t hit = FindMarker(chunk, pos, special, &length);
      if (hit == std::string_view::npos) {
        TokenizePiece(chunk.substr(pos), special, &tokens);
        break;
      }
      if (hit > pos) TokenizePiece(chunk.substr(pos, hit - pos), special, &tokens);
      tokens.push_back(MakeToken(std::string(chunk.substr(hit, length)), special));
      pos = hit + length;
    }
    i = j;
  }
  return tokens;
}

}  // namespace kpaug
