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

#include "kpaug/corpus/corpus_io.h"

#include <unordered_set>

#include "absl/status/status.h"
#include "kpaug/textnorm/normalizer.h"
#include "kpaug/textnorm/tokenizer.h"
#include "kpaug/util/checksum.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

std::string JoinSentences(const std::vector<Sentence>& sentences) {
  std::vector<std::string> lines;
  lines.reserve(sentences.size());
  for (const Sentence& s : sentences) lines.push_back(JoinSentence(s));
  return JoinStrings(lines, "\n");
}

absl::StatusOr<std::string> RequireString(const Json& record,
                                          std::string_view key) {
  auto it = record.find(key);
  if (it == record.end()) {
    return absl::InvalidArgumentError(StrCat("missing field '", key, "'"));
  }
  if (!it->is_string()) {
    return absl::InvalidArgumentError(StrCat("field '", key, "' is not a string"));
  }
  return it->get<std::string>();
}

absl::Status CheckNormalized(std::string_view field, std::string_view text,
                             const SpecialTokens& special) {
  if (Normalize(text, special) != text) {
    return absl::InvalidArgumentError(
        StrCat("field '", field, "' is not normalized: \"", text, "\""));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Sentence>> ParseSentences(
    std::string_view field, std::string_view text, const SpecialTokens& special) {
  std::vector<Sentence> sentences;
  for (std::string_view line : SplitString(text, '\n', /*skip_empty=*/true)) {
    if (absl::Status s = CheckNormalized(field, line, special); !s.ok()) return s;
    Sentence sentence{Tokenize(line, special)};
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
  }
  return sentences;
}

absl::StatusOr<std::vector<std::string>> StringList(const Json& record,
                                                    std::string_view key) {
  auto it = record.find(key);
  if (it == record.end()) {
    return absl::InvalidArgumentError(StrCat("missing field '", key, "'"));
  }
  if (!it->is_array()) {
    return absl::InvalidArgumentError(StrCat("field '", key, "' is not a list"));
  }
  std::vector<std::string> out;
  for (const Json& item : *it) {
    if (!item.is_string()) {
      return absl::InvalidArgumentError(
          StrCat("field '", key, "' holds a non-string entry"));
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Json DocumentToJson(const Document& doc) {
  Json keyphrases = Json::array();
  for (const Keyphrase& kp : doc.keyphrases) keyphrases.push_back(kp.surface);
  Json record;
  record["id"] = doc.id;
  record["title"] = JoinSentence(doc.title);
  record["abstract"] = JoinSentences(doc.abstract);
  record["body"] = JoinSentences(doc.body);
  record["keyphrases"] = std::move(keyphrases);
  record["provenance"] = std::string(ProvenanceName(doc.provenance));
  return record;
}

absl::StatusOr<Document> DocumentFromJson(const Json& record,
                                          const SpecialTokens& special) {
  Document doc;
  absl::StatusOr<std::string> id = RequireString(record, "id");
  if (!id.ok()) return id.status();
  if (id->empty()) return absl::InvalidArgumentError("empty id");
  doc.id = *std::move(id);

  absl::StatusOr<std::string> title = RequireString(record, "title");
  if (!title.ok()) return title.status();
  if (title->find('\n') != std::string::npos) {
    return absl::InvalidArgumentError("title spans several lines");
  }
  if (absl::Status s = CheckNormalized("title", *title, special); !s.ok()) return s;
  doc.title.tokens = Tokenize(*title, special);

  for (auto [key, target] : {std::pair{"abstract", &doc.abstract},
                             std::pair{"body", &doc.body}}) {
    absl::StatusOr<std::string> text = RequireString(record, key);
    if (!text.ok()) return text.status();
    absl::StatusOr<std::vector<Sentence>> sentences =
        ParseSentences(key, *text, special);
    if (!sentences.ok()) return sentences.status();
    *target = *std::move(sentences);
  }

  absl::StatusOr<std::vector<std::string>> keyphrases =
      StringList(record, "keyphrases");
  if (!keyphrases.ok()) return keyphrases.status();
  for (std::string& kp : *keyphrases) {
    if (kp.empty()) return absl::InvalidArgumentError("empty keyphrase");
    if (absl::Status s = CheckNormalized("keyphrases", kp, special); !s.ok()) {
      return s;
    }
    doc.keyphrases.push_back(Keyphrase{std::move(kp)});
  }

  absl::StatusOr<std::string> provenance = RequireString(record, "provenance");
  if (!provenance.ok()) return provenance.status();
  absl::StatusOr<Provenance> parsed = ParseProvenance(*provenance);
  if (!parsed.ok()) return parsed.status();
  doc.provenance = *parsed;
  return doc;
}

absl::StatusOr<Corpus> LoadCorpus(const std::string& path,
                                  const SpecialTokens& special) {
  Corpus corpus;
  std::unordered_set<std::string> ids;
  absl::Status status =
      ForEachJsonLine(path, [&](const Json& record, int) -> absl::Status {
        absl::StatusOr<Document> doc = DocumentFromJson(record, special);
        if (!doc.ok()) return doc.status();
        if (!ids.insert(doc->id).second) {
          return absl::InvalidArgumentError(
              StrCat("duplicate id '", doc->id, "'"));
        }
        corpus.documents.push_back(*std::move(doc));
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  absl::StatusOr<std::string> checksum = Sha256File(path);
  if (checksum.ok()) corpus.config_fingerprint = *checksum;
  return corpus;
}

absl::Status SaveCorpus(const Corpus& corpus, const std::string& path) {
  std::vector<Json> records;
  records.reserve(corpus.size());
  for (const Document& doc : corpus.documents) {
    records.push_back(DocumentToJson(doc));
  }
  return WriteJsonLines(path, records);
}

absl::StatusOr<RawRecord> RawRecordFromJson(const Json& record) {
  RawRecord raw;
  auto id = record.find("id");
  if (id != record.end()) {
    if (id->is_string()) {
      raw.id = id->get<std::string>();
    } else if (id->is_number_integer()) {
      raw.id = std::to_string(id->get<long long>());
    } else {
      return absl::InvalidArgumentError("field 'id' is not a string");
    }
  }
  for (auto [key, target] : {std::pair{"title", &raw.title},
                             std::pair{"abstract", &raw.abstract},
                             std::pair{"body", &raw.body}}) {
    auto it = record.find(key);
    if (it == record.end() || it->is_null()) continue;
    if (!it->is_string()) {
      return absl::InvalidArgumentError(
          StrCat("field '", key, "' is not a string"));
    }
    *target = it->get<std::string>();
  }
  if (record.contains("keyphrases") && !record["keyphrases"].is_null()) {
    absl::StatusOr<std::vector<std::string>> kps = StringList(record, "keyphrases");
    if (!kps.ok()) return kps.status();
    raw.keyphrases = *std::move(kps);
  }
  return raw;
}

absl::StatusOr<std::vector<RawRecord>> LoadRawRecords(const std::string& path) {
  std::vector<RawRecord> records;
  absl::Status status =
      ForEachJsonLine(path, [&](const Json& record, int line) -> absl::Status {
        absl::StatusOr<RawRecord> raw = RawRecordFromJson(record);
        if (!raw.ok()) return raw.status();
        if (raw->id.empty()) raw->id = StrCat("line-", line);
        records.push_back(*std::move(raw));
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return records;
}

absl::Status SaveRejections(std::span<const Rejection> rejections,
                            const std::string& path) {
  std::vector<Json> records;
  for (const Rejection& r : rejections) {
    Json record;
    record["id"] = r.id;
    record["reason"] = std::string(RejectReasonName(r.reason));
    record["detail"] = r.detail;
    records.push_back(std::move(record));
  }
  return WriteJsonLines(path, records);
}

}  // namespace kpaug
