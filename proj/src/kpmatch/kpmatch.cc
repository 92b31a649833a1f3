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

#include "kpaug/kpmatch/kpmatch.h"

#include <algorithm>

#include "kpaug/corpus/flatten.h"
#include "kpaug/textnorm/porter_stemmer.h"
#include "kpaug/util/strings.h"

namespace kpaug {

std::vector<std::vector<std::string>> PhraseVariants(
    std::span<const Token> phrase) {
  std::vector<std::vector<std::string>> variants;
  if (phrase.empty()) return variants;
  variants.push_back(StemTokens(phrase));

  bool hyphenated = false;
  std::vector<std::string> split;
  for (const Token& t : phrase) {
    if (t.kind == TokenKind::kWord && t.surface.find('-') != std::string::npos) {
      for (std::string_view part : SplitString(t.surface, '-', true)) {
        split.push_back(Stem(part));
        hyphenated = true;
      }
    } else {
      split.push_back(t.kind == TokenKind::kWord ? Stem(t.surface) : t.surface);
    }
  }
  if (hyphenated && !split.empty() && split != variants.front()) {
    variants.push_back(std::move(split));
  }
  return variants;
}

Matcher::Matcher(std::span<const Token> tokens, const SpecialTokens& special)
    : stems_(StemTokens(tokens)), special_(special) {
  blocked_.reserve(tokens.size());
  for (const Token& t : tokens) {
    blocked_.push_back(t.surface == special.delimiter ||
                       t.surface == special.mask);
  }
}

bool Matcher::MatchesAt(const std::vector<std::string>& variant,
                        size_t pos) const {
  if (pos + variant.size() > stems_.size()) return false;
  for (size_t i = 0; i < variant.size(); ++i) {
    if (blocked_[pos + i] || stems_[pos + i] != variant[i]) return false;
  }
  return true;
}

std::vector<TokenSpan> Matcher::Find(std::span<const Token> phrase) const {
  std::vector<TokenSpan> spans;
  auto variants = PhraseVariants(phrase);
  std::sort(variants.begin(), variants.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  size_t pos = 0;
  while (pos < stems_.size()) {
    size_t matched = 0;
    for (const auto& v : variants) {
      if (MatchesAt(v, pos)) {
        matched = v.size();
        break;
      }
    }
    if (matched > 0) {
      spans.push_back({pos, pos + matched});
      pos += matched;
    } else {
      ++pos;
    }
  }
  return spans;
}

std::vector<TokenSpan> Matcher::Find(const Keyphrase& kp) const {
  return Find(kp.Tokens(special_));
}

bool Matcher::Contains(std::span<const Token> phrase) const {
  for (const auto& v : PhraseVariants(phrase)) {
    for (size_t pos = 0; pos < stems_.size(); ++pos) {
      if (MatchesAt(v, pos)) return true;
    }
  }
  return false;
}

std::vector<TokenSpan> FindOccurrences(const Keyphrase& kp,
                                       std::span<const Token> tokens,
                                       const SpecialTokens& special) {
  return Matcher(tokens, special).Find(kp);
}

PresenceSplit ClassifyTokens(std::span<const Keyphrase> keyphrases,
                             std::span<const Token> tokens,
                             const SpecialTokens& special) {
  PresenceSplit split;
  Matcher matcher(tokens, special);
  for (const Keyphrase& kp : keyphrases) {
    if (matcher.Contains(kp.Tokens(special))) {
      split.present.push_back(kp);
    } else {
      split.absent.push_back(kp);
    }
  }
  return split;
}

PresenceSplit Classify(const Document& doc, PartSet scope,
                       const SpecialTokens& special) {
  FlattenOptions options;
  options.special = special;
  options.max_body_words = kNoWordCap;
  return ClassifyTokens(doc.keyphrases, FlattenTokens(doc, scope, options),
                        special);
}

}  // namespace kpaug
