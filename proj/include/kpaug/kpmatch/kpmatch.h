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

#ifndef KPAUG_KPMATCH_KPMATCH_H_
#define KPAUG_KPMATCH_KPMATCH_H_

#include <span>
#include <string>
#include <vector>

#include "kpaug/corpus/document.h"
#include "kpaug/textnorm/token.h"

namespace kpaug {

// Half-open token interval [start, end).
struct TokenSpan {
  size_t start = 0;
  size_t end = 0;
  size_t size() const { return end - start; }
  bool operator==(const TokenSpan&) const = default;
};

struct PresenceSplit {
  std::vector<Keyphrase> present;
  std::vector<Keyphrase> absent;
};

// Stem sequences a phrase may match as: its own tokens, plus the variant with
// every hyphenated word split at its hyphens ("knowledge-based system" also
// matches "knowledge based system").
std::vector<std::vector<std::string>> PhraseVariants(
    std::span<const Token> phrase);

// Stemmed view of a token stream, built once and queried per phrase.
// Delimiter and mask tokens never take part in a match.
class Matcher {
 public:
  explicit Matcher(std::span<const Token> tokens,
                   const SpecialTokens& special = {});

  // Non-overlapping occurrences, scanning left to right. At each position the
  // longest matching variant wins and the scan resumes after it.
  std::vector<TokenSpan> Find(std::span<const Token> phrase) const;
  std::vector<TokenSpan> Find(const Keyphrase& kp) const;
  bool Contains(std::span<const Token> phrase) const;

  size_t size() const { return stems_.size(); }

 private:
  bool MatchesAt(const std::vector<std::string>& variant, size_t pos) const;

  std::vector<std::string> stems_;
  std::vector<bool> blocked_;
  SpecialTokens special_;
};

std::vector<TokenSpan> FindOccurrences(const Keyphrase& kp,
                                       std::span<const Token> tokens,
                                       const SpecialTokens& special = {});

// Splits `keyphrases` by whether they occur in `tokens`, keeping their order.
PresenceSplit ClassifyTokens(std::span<const Keyphrase> keyphrases,
                             std::span<const Token> tokens,
                             const SpecialTokens& special = {});

// Presence over the scoped parts of the document, body uncapped. Abstract
// sentences are contiguous in the flattened stream, so a keyphrase may match
// across an abstract sentence boundary; body sentences are delimited and
// never match across.
PresenceSplit Classify(const Document& doc, PartSet scope,
                       const SpecialTokens& special = {});

}  // namespace kpaug

#endif  // KPAUG_KPMATCH_KPMATCH_H_
