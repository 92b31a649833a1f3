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

#include "kpaug/corpus/document.h"

#include <array>
#include <utility>

#include "kpaug/textnorm/tokenizer.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

constexpr std::array<std::pair<Provenance, std::string_view>, 10> kNames = {{
    {Provenance::kOriginal, "original"},
    {Provenance::kAugBody, "aug_body"},
    {Provenance::kAugTaSr, "aug_ta_sr"},
    {Provenance::kAugTaBt, "aug_ta_bt"},
    {Provenance::kAugTaKpd, "aug_ta_kpd"},
    {Provenance::kAugTaKpsr, "aug_ta_kpsr"},
    {Provenance::kAugBodySr, "aug_body_sr"},
    {Provenance::kAugBodyBt, "aug_body_bt"},
    {Provenance::kAugBodyKpd, "aug_body_kpd"},
    {Provenance::kAugBodyKpsr, "aug_body_kpsr"},
}};

}  // namespace

std::string_view ProvenanceName(Provenance provenance) {
  for (const auto& [p, name] : kNames) {
    if (p == provenance) return name;
  }
  return "unknown";
}

absl::StatusOr<Provenance> ParseProvenance(std::string_view name) {
  for (const auto& [p, n] : kNames) {
    if (n == name) return p;
  }
  return absl::InvalidArgumentError(
      StrCat("unknown provenance '", name, "'"));
}

std::vector<Token> Keyphrase::Tokens(const SpecialTokens& special) const {
  return Tokenize(surface, special);
}

absl::StatusOr<PartSet> PartSet::Parse(std::string_view spec) {
  if (spec == "ta") return TitleAbstract();
  if (spec == "body") return Body();
  if (spec == "full") return FullText();
  PartSet parts;
  for (std::string_view item : SplitString(spec, ',')) {
    if (item == "title") {
      parts.bits_ |= static_cast<unsigned>(Part::kTitle);
    } else if (item == "abstract") {
      parts.bits_ |= static_cast<unsigned>(Part::kAbstract);
    } else if (item == "body") {
      parts.bits_ |= static_cast<unsigned>(Part::kBody);
    } else {
      return absl::InvalidArgumentError(
          StrCat("unknown part '", item, "' in '", spec, "'"));
    }
  }
  if (parts.empty()) return absl::InvalidArgumentError("empty part set");
  return parts;
}

std::string PartSet::ToString() const {
  std::vector<std::string_view> names;
  if (Contains(Part::kTitle)) names.push_back("title");
  if (Contains(Part::kAbstract)) names.push_back("abstract");
  if (Contains(Part::kBody)) names.push_back("body");
  return JoinStrings(names, ",");
}

PartSet SampleParts(Provenance provenance) {
  switch (provenance) {
    case Provenance::kAugBody:
    case Provenance::kAugBodySr:
    case Provenance::kAugBodyBt:
    case Provenance::kAugBodyKpd:
    case Provenance::kAugBodyKpsr:
      return PartSet::Body();
    default:
      return PartSet::TitleAbstract();
  }
}

absl::Status ValidateOriginal(const Document& doc, const SpecialTokens& special,
                              size_t min_sentences) {
  if (doc.id.empty()) return absl::InvalidArgumentError("empty id");
  if (doc.title.empty()) {
    return absl::InvalidArgumentError(StrCat(doc.id, ": empty title"));
  }
  if (doc.keyphrases.empty()) {
    return absl::InvalidArgumentError(StrCat(doc.id, ": no keyphrases"));
  }
  if (doc.abstract.size() + doc.body.size() < min_sentences) {
    return absl::InvalidArgumentError(
        StrCat(doc.id, ": fewer than ", min_sentences, " sentences"));
  }
  for (const Keyphrase& kp : doc.keyphrases) {
    const std::vector<Token> tokens = kp.Tokens(special);
    if (tokens.empty()) {
      return absl::InvalidArgumentError(StrCat(doc.id, ": empty keyphrase"));
    }
    for (const Token& t : tokens) {
      if (t.surface == special.delimiter || t.surface == special.mask) {
        return absl::InvalidArgumentError(
            StrCat(doc.id, ": marker inside keyphrase '", kp.surface, "'"));
      }
    }
  }
  return absl::OkStatus();
}

}  // namespace kpaug
