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

#include "kpaug/corpus/preprocess.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "kpaug/corpus/flatten.h"
#include "kpaug/textnorm/normalizer.h"
#include "kpaug/textnorm/porter_stemmer.h"
#include "kpaug/textnorm/tokenizer.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

bool Blank(const std::optional<std::string>& field) {
  return !field.has_value() ||
         std::all_of(field->begin(), field->end(),
                     [](unsigned char c) { return std::isspace(c); });
}

Rejection Reject(const RawRecord& record, RejectReason reason,
                 std::string detail) {
  return Rejection{record.id, reason, std::move(detail)};
}

// Keyphrase stems, sorted; part of the duplicate key.
std::string KeyphraseKey(const Document& doc, const SpecialTokens& special) {
  std::vector<std::string> stems;
  for (const Keyphrase& kp : doc.keyphrases) {
    stems.push_back(StemPhrase(kp.surface, special));
  }
  std::sort(stems.begin(), stems.end());
  return JoinStrings(stems, "\x1f");
}

}  // namespace

std::string_view RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kMissingField:
      return "missing_field";
    case RejectReason::kTooFewSentences:
      return "too_few_sentences";
    case RejectReason::kNoKeyphrases:
      return "no_keyphrases";
    case RejectReason::kDuplicate:
      return "duplicate";
    case RejectReason::kDuplicateId:
      return "duplicate_id";
  }
  return "unknown";
}

std::variant<Document, Rejection> Preprocess(const RawRecord& record,
                                             const PreprocessOptions& options) {
  const SpecialTokens& special = options.special;
  if (record.id.empty()) {
    return Reject(record, RejectReason::kMissingField, "id");
  }
  for (const auto& [name, field] :
       {std::pair{"title", &record.title}, std::pair{"abstract", &record.abstract},
        std::pair{"body", &record.body}}) {
    if (Blank(*field)) return Reject(record, RejectReason::kMissingField, name);
  }
  if (!record.keyphrases.has_value()) {
    return Reject(record, RejectReason::kMissingField, "keyphrases");
  }
  if (record.keyphrases->empty()) {
    return Reject(record, RejectReason::kNoKeyphrases, "keyphrases");
  }

  Document doc;
  doc.id = record.id;
  doc.title.tokens = Tokenize(Normalize(*record.title, special), special);
  doc.abstract =
      options.splitter.Split(Normalize(*record.abstract, special), special);
  doc.body = options.splitter.Split(Normalize(*record.body, special), special);
  if (doc.title.empty()) {
    return Reject(record, RejectReason::kMissingField, "title is empty after cleaning");
  }
  if (doc.abstract.empty()) {
    return Reject(record, RejectReason::kMissingField, "abstract is empty after cleaning");
  }
  if (doc.body.empty()) {
    return Reject(record, RejectReason::kMissingField, "body is empty after cleaning");
  }

  std::unordered_set<std::string> seen_stems;
  for (const std::string& raw_kp : *record.keyphrases) {
    std::vector<Token> tokens = Tokenize(Normalize(raw_kp, special), special);
    // Markers cannot be part of a gold phrase.
    std::erase_if(tokens, [&](const Token& t) {
      return t.surface == special.delimiter || t.surface == special.mask;
    });
    if (tokens.empty()) continue;
    Keyphrase kp{JoinTokens(tokens)};
    if (!seen_stems.insert(StemPhrase(kp.surface, special)).second) continue;
    doc.keyphrases.push_back(std::move(kp));
  }
  if (doc.keyphrases.empty()) {
    return Reject(record, RejectReason::kNoKeyphrases,
                  "no keyphrase survives cleaning");
  }

  const size_t sentences = doc.abstract.size() + doc.body.size();
  if (sentences < options.min_sentences) {
    return Reject(record, RejectReason::kTooFewSentences,
                  StrCat(sentences, " sentences"));
  }
  return doc;
}

IngestResult Ingest(std::span<const RawRecord> records,
                    const PreprocessOptions& options) {
  IngestResult result;
  std::unordered_set<std::string> ids;
  std::unordered_set<std::string> contents;
  FlattenOptions flatten{.special = options.special, .max_body_words = kNoWordCap};
  for (const RawRecord& record : records) {
    std::variant<Document, Rejection> outcome = Preprocess(record, options);
    if (auto* rejection = std::get_if<Rejection>(&outcome)) {
      result.rejections.push_back(std::move(*rejection));
      continue;
    }
    Document& doc = std::get<Document>(outcome);
    if (ids.count(doc.id) > 0) {
      result.rejections.push_back(
          Reject(record, RejectReason::kDuplicateId, "id seen earlier"));
      continue;
    }
    std::string key = StrCat(
        FlattenInput(doc, PartSet::FullText(), flatten), "\x1e",
        KeyphraseKey(doc, options.special));
    if (!contents.insert(std::move(key)).second) {
      result.rejections.push_back(Reject(record, RejectReason::kDuplicate,
                                         "same text and keyphrases as an earlier record"));
      continue;
    }
    ids.insert(doc.id);
    result.corpus.documents.push_back(std::move(doc));
  }
  return result;
}

}  // namespace kpaug
