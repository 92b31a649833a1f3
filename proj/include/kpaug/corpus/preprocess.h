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

#ifndef KPAUG_CORPUS_PREPROCESS_H_
#define KPAUG_CORPUS_PREPROCESS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kpaug/corpus/document.h"
#include "kpaug/textnorm/sentence_splitter.h"

namespace kpaug {

// An ingest record before cleaning. Absent JSON fields stay nullopt.
struct RawRecord {
  std::string id;
  std::optional<std::string> title;
  std::optional<std::string> abstract;
  std::optional<std::string> body;
  std::optional<std::vector<std::string>> keyphrases;
};

enum class RejectReason {
  kMissingField,
  kTooFewSentences,
  kNoKeyphrases,
  kDuplicate,
  kDuplicateId,
};

std::string_view RejectReasonName(RejectReason reason);

struct Rejection {
  std::string id;
  RejectReason reason;
  std::string detail;
};

struct PreprocessOptions {
  SpecialTokens special;
  SentenceSplitter splitter;
  size_t min_sentences = 5;
};

// Cleans one record: normalize, sentence-split and tokenize every field.
// Keyphrases that normalize to nothing or repeat an earlier keyphrase's stems
// are dropped. Rejects records with a missing or empty field, with no usable
// keyphrase, or with fewer than `min_sentences` abstract+body sentences.
std::variant<Document, Rejection> Preprocess(const RawRecord& record,
                                             const PreprocessOptions& options);

struct IngestResult {
  Corpus corpus;
  std::vector<Rejection> rejections;
};

// Preprocesses records in order and removes repeated ids and exact
// duplicates (same flattened T || A || Body and same sorted keyphrase stems);
// the first occurrence wins.
IngestResult Ingest(std::span<const RawRecord> records,
                    const PreprocessOptions& options);

}  // namespace kpaug

#endif  // KPAUG_CORPUS_PREPROCESS_H_
