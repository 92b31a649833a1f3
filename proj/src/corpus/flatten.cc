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

#include "kpaug/corpus/flatten.h"

#include <algorithm>

namespace kpaug {

size_t CountWords(std::span<const Token> tokens, const SpecialTokens& special) {
  return static_cast<size_t>(
      std::count_if(tokens.begin(), tokens.end(), [&](const Token& t) {
        return t.surface != special.delimiter;
      }));
}

std::vector<Sentence> CapBody(const std::vector<Sentence>& body,
                              size_t max_words) {
  std::vector<Sentence> capped;
  size_t used = 0;
  for (const Sentence& sentence : body) {
    if (used >= max_words) break;
    const size_t room = max_words - used;
    if (sentence.size() <= room) {
      capped.push_back(sentence);
      used += sentence.size();
    } else {
      Sentence cut;
      cut.tokens.assign(sentence.tokens.begin(), sentence.tokens.begin() + room);
      capped.push_back(std::move(cut));
      used = max_words;
    }
  }
  return capped;
}

std::vector<Token> FlattenTokens(const Document& doc, PartSet parts,
                                 const FlattenOptions& options) {
  const Token delimiter = MakeToken(options.special.delimiter, options.special);
  std::vector<Token> out;
  auto open_unit = [&] {
    if (!out.empty()) out.push_back(delimiter);
  };
  if (parts.Contains(Part::kTitle) && !doc.title.empty()) {
    open_unit();
    out.insert(out.end(), doc.title.tokens.begin(), doc.title.tokens.end());
  }
  if (parts.Contains(Part::kAbstract) && !doc.abstract.empty()) {
    open_unit();
    for (const Sentence& s : doc.abstract) {
      out.insert(out.end(), s.tokens.begin(), s.tokens.end());
    }
  }
  if (parts.Contains(Part::kBody)) {
    for (const Sentence& s : CapBody(doc.body, options.max_body_words)) {
      if (s.empty()) continue;
      open_unit();
      out.insert(out.end(), s.tokens.begin(), s.tokens.end());
    }
  }
  return out;
}

std::string FlattenInput(const Document& doc, PartSet parts,
                         const FlattenOptions& options) {
  return JoinTokens(FlattenTokens(doc, parts, options));
}

}  // namespace kpaug
