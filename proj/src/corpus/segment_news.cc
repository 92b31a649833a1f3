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

#include "kpaug/corpus/segment_news.h"

#include "absl/status/status.h"
#include "kpaug/textnorm/normalizer.h"
#include "kpaug/textnorm/tokenizer.h"

namespace kpaug {

size_t AbstractPrefixLength(std::span<const size_t> sentence_words,
                            size_t cap_words) {
  size_t used = 0;
  size_t count = 0;
  for (size_t words : sentence_words) {
    if (used + words > cap_words) break;
    used += words;
    ++count;
  }
  // An oversized first sentence is taken whole rather than leaving the
  // abstract empty.
  if (count == 0 && !sentence_words.empty()) count = 1;
  return count;
}

absl::StatusOr<NewsSegments> SegmentNews(std::string_view headline,
                                         std::string_view fulltext,
                                         size_t abstract_cap_words,
                                         const SentenceSplitter& splitter,
                                         const SpecialTokens& special) {
  std::vector<Sentence> sentences =
      splitter.Split(Normalize(fulltext, special), special);
  if (sentences.empty()) {
    return absl::InvalidArgumentError("fulltext is empty");
  }
  std::vector<size_t> words;
  words.reserve(sentences.size());
  for (const Sentence& s : sentences) words.push_back(s.size());
  const size_t cut = AbstractPrefixLength(words, abstract_cap_words);

  NewsSegments segments;
  segments.title.tokens = Tokenize(Normalize(headline, special), special);
  segments.abstract.assign(std::make_move_iterator(sentences.begin()),
                           std::make_move_iterator(sentences.begin() + cut));
  segments.body.assign(std::make_move_iterator(sentences.begin() + cut),
                       std::make_move_iterator(sentences.end()));
  return segments;
}

}  // namespace kpaug
