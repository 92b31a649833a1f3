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

#ifndef KPAUG_CORPUS_CORPUS_IO_H_
#define KPAUG_CORPUS_CORPUS_IO_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kpaug/corpus/document.h"
#include "kpaug/corpus/preprocess.h"
#include "kpaug/util/jsonl.h"

namespace kpaug {

// Corpus record, one per line:
//   {"id", "title", "abstract", "body", "keyphrases": [...], "provenance"}
// Sentences of the abstract and body are separated by '\n' inside the
// string, so loading never has to re-split them.
Json DocumentToJson(const Document& doc);
absl::StatusOr<Document> DocumentFromJson(const Json& record,
                                          const SpecialTokens& special = {});

absl::StatusOr<Corpus> LoadCorpus(const std::string& path,
                                  const SpecialTokens& special = {});
absl::Status SaveCorpus(const Corpus& corpus, const std::string& path);

// Raw records share the corpus shape minus provenance.
absl::StatusOr<RawRecord> RawRecordFromJson(const Json& record);
absl::StatusOr<std::vector<RawRecord>> LoadRawRecords(const std::string& path);

absl::Status SaveRejections(std::span<const Rejection> rejections,
                            const std::string& path);

}  // namespace kpaug

#endif  // KPAUG_CORPUS_CORPUS_IO_H_
