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

#ifndef KPAUG_CORPUS_DOCUMENT_H_
#define KPAUG_CORPUS_DOCUMENT_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "kpaug/textnorm/token.h"

namespace kpaug {

enum class Provenance {
  kOriginal,
  kAugBody,
  kAugTaSr,
  kAugTaBt,
  kAugTaKpd,
  kAugTaKpsr,
  kAugBodySr,
  kAugBodyBt,
  kAugBodyKpd,
  kAugBodyKpsr,
};

std::string_view ProvenanceName(Provenance provenance);
absl::StatusOr<Provenance> ParseProvenance(std::string_view name);

// A gold keyphrase: normalized text, tokens separated by single spaces.
struct Keyphrase {
  std::string surface;

  std::vector<Token> Tokens(const SpecialTokens& special = {}) const;
  bool operator==(const Keyphrase&) const = default;
};

enum class Part { kTitle = 1, kAbstract = 2, kBody = 4 };

// A non-empty subset of {title, abstract, body}.
class PartSet {
 public:
  constexpr PartSet() = default;
  constexpr PartSet(std::initializer_list<Part> parts) {
    for (Part p : parts) bits_ |= static_cast<unsigned>(p);
  }

  static constexpr PartSet TitleAbstract() {
    return {Part::kTitle, Part::kAbstract};
  }
  static constexpr PartSet Body() { return {Part::kBody}; }
  static constexpr PartSet FullText() {
    return {Part::kTitle, Part::kAbstract, Part::kBody};
  }

  // Accepts "ta", "body", "full", or a comma list such as "title,abstract".
  static absl::StatusOr<PartSet> Parse(std::string_view spec);

  constexpr bool Contains(Part p) const {
    return (bits_ & static_cast<unsigned>(p)) != 0;
  }
  constexpr bool empty() const { return bits_ == 0; }
  // Every part of this set is also in `other`.
  constexpr bool IsSubsetOf(PartSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  std::string ToString() const;
  bool operator==(const PartSet&) const = default;

 private:
  unsigned bits_ = 0;
};

struct Document {
  std::string id;
  Sentence title;
  std::vector<Sentence> abstract;
  std::vector<Sentence> body;
  std::vector<Keyphrase> keyphrases;
  Provenance provenance = Provenance::kOriginal;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;
  std::string config_fingerprint;

  size_t size() const { return documents.size(); }
  bool empty() const { return documents.empty(); }
};

// Model-input parts of a sample: T || A for originals and TA augmentations,
// the body for body augmentations.
PartSet SampleParts(Provenance provenance);

// Checks the invariants of an accepted original document: non-empty id and
// keyphrases, at least `min_sentences` abstract+body sentences, no special
// markers inside keyphrases.
absl::Status ValidateOriginal(const Document& doc,
                              const SpecialTokens& special = {},
                              size_t min_sentences = 5);

}  // namespace kpaug

#endif  // KPAUG_CORPUS_DOCUMENT_H_
