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

#ifndef KPAUG_TEXTNORM_SENTENCE_SPLITTER_H_
#define KPAUG_TEXTNORM_SENTENCE_SPLITTER_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "kpaug/textnorm/token.h"

namespace kpaug {

// Rule-based sentence splitter working on the token stream. A sentence ends
// after a run of terminal tokens ("." "!" "?"), unless the run is a single
// "." that directly follows an abbreviation.
class SentenceSplitter {
 public:
  // Uses the bundled English abbreviation list.
  SentenceSplitter();
  explicit SentenceSplitter(std::set<std::string> abbreviations);

  // One lowercase abbreviation per line, without the trailing period. Blank
  // lines and lines starting with '#' are ignored.
  static absl::StatusOr<SentenceSplitter> FromFile(const std::string& path);

  std::vector<Sentence> Split(std::string_view text,
                              const SpecialTokens& special = {}) const;
  std::vector<Sentence> SplitTokens(std::vector<Token> tokens) const;

  bool IsAbbreviation(std::string_view word) const {
    return abbreviations_.count(std::string(word)) > 0;
  }

  static const std::vector<std::string>& DefaultAbbreviations();

 private:
  std::set<std::string> abbreviations_;
};

}  // namespace kpaug

#endif  // KPAUG_TEXTNORM_SENTENCE_SPLITTER_H_
