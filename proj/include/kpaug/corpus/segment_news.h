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

#ifndef KPAUG_CORPUS_SEGMENT_NEWS_H_
#define KPAUG_CORPUS_SEGMENT_NEWS_H_

#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "kpaug/textnorm/sentence_splitter.h"
#include "kpaug/textnorm/token.h"

namespace kpaug {

struct NewsSegments {
  Sentence title;
  std::vector<Sentence> abstract;
  std::vector<Sentence> body;
};

// Number of leading sentences that form the abstract: the longest prefix of
// whole sentences with at most `cap_words` tokens in total, or the first
// sentence alone when even it exceeds the cap.
size_t AbstractPrefixLength(std::span<const size_t> sentence_words,
                            size_t cap_words);

// Maps a news article onto title / abstract / body. Fails on a fulltext that
// contains no tokens after normalization.
absl::StatusOr<NewsSegments> SegmentNews(std::string_view headline,
                                         std::string_view fulltext,
                                         size_t abstract_cap_words = 300,
                                         const SentenceSplitter& splitter = {},
                                         const SpecialTokens& special = {});

}  // namespace kpaug

#endif  // KPAUG_CORPUS_SEGMENT_NEWS_H_
