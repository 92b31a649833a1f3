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

#ifndef KPAUG_LEXICON_LEXICON_H_
#define KPAUG_LEXICON_LEXICON_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "kpaug/textnorm/token.h"

namespace kpaug {

// Lemma -> ordered synonym lemmas. Multiword lemmas are underscore-joined
// ("medical_examination"); everything is lowercase.
//
// File format, one lemma per line:  lemma<TAB>syn1,syn2,...
class Lexicon {
 public:
  struct Entry {
    std::string lemma;
    std::vector<std::string> synonyms;
  };

  static absl::StatusOr<Lexicon> Load(const std::string& path);
  // `source` names the input in error messages.
  static absl::StatusOr<Lexicon> Parse(std::string_view text,
                                       std::string_view source = "<lexicon>");

  // Repeated synonyms are dropped; a repeated lemma is an error.
  absl::Status Add(std::string lemma, std::vector<std::string> synonyms);

  const std::vector<std::string>* Find(std::string_view lemma) const;

  // Entries in file order.
  const std::vector<Entry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, size_t, std::less<>> index_;
};

// Synonyms of a single token, as token sequences, in lexicon order. The
// token is looked up as written and, if hyphenated and not found, with its
// hyphens turned into underscores. Synonyms equal to the token are skipped.
std::vector<std::vector<Token>> TokenSynonyms(const Lexicon& lexicon,
                                              const Token& token,
                                              const SpecialTokens& special = {});

// Replacement for a phrase, or nullopt when the lexicon has nothing:
//   1. the whole phrase, underscore-joined, is looked up and its first
//      differing synonym returned;
//   2. otherwise each token is replaced by its first differing synonym
//      (TokenSynonyms), tokens without one are kept, and nullopt is returned
//      when no token changed.
// The result never equals the input.
std::optional<std::vector<Token>> SynonymFor(const Lexicon& lexicon,
                                             std::span<const Token> phrase,
                                             const SpecialTokens& special = {});

}  // namespace kpaug

#endif  // KPAUG_LEXICON_LEXICON_H_
