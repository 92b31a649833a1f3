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
#ifndef KPAUG_AUGMENT_AUGMENT_H_
#define KPAUG_AUGMENT_AUGMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "kpaug/corpus/document.h"
#include "kpaug/kpmatch/kpmatch.h"
#include "kpaug/lexicon/lexicon.h"
#include "kpaug/translate/translator.h"
#include "kpaug/util/jsonl.h"

namespace kpaug {

enum class Strategy {
  kBody,
  kTaSr,
  kTaBt,
  kTaKpd,
  kTaKpsr,
  kBodySr,
  kBodyBt,
  kBodyKpd,
  kBodyKpsr,
};

enum class Transform { kNone, kSr, kBt, kKpd, kKpsr };

// "body", "ta_sr", ..., "body_kpsr".
std::string_view StrategyName(Strategy strategy);
absl::StatusOr<Strategy> ParseStrategy(std::string_view name);
const std::vector<Strategy>& AllStrategies();
Provenance StrategyProvenance(Strategy strategy);
Transform StrategyTransform(Strategy strategy);
bool TargetsBody(Strategy strategy);

struct AugConfig {
  Strategy strategy = Strategy::kBody;
  // Chance that a present keyphrase is masked. Not a published value.
  double kpd_prob = 0.7;
  double sr_ratio = 0.10;
  // SR picks the first differing synonym unless this is set, in which case
  // it picks uniformly among the differing single-token synonyms.
  bool sr_random_synonym = false;
  SpecialTokens special;
  size_t max_body_words = 800;
  std::string source_language = "en";
  std::string pivot_language = "fr";
  double temperature = 0.7;
  // Sentences per translation request.
  size_t bt_batch_size = 32;
  uint64_t seed = 0;

  absl::Status Validate() const;
  Json ToJson() const;
  // Overrides fields from a JSON object using the ToJson() key names.
  // Unknown keys are an error.
  absl::Status ApplyJson(const Json& overrides);

 private:
  absl::Status ApplyJsonUnchecked(const Json& overrides);
};

// The token stream a strategy transforms: T || A for TA strategies, the
// capped body for body strategies. nullopt when a body strategy meets an
// empty body (the document yields no sample).
std::optional<std::vector<Token>> SelectTarget(const Document& doc,
                                               Strategy strategy,
                                               const AugConfig& config);

// Present keyphrases of `tokens` with their occurrences, in keyphrase order.
using SpansByKeyphrase = std::vector<std::pair<Keyphrase, std::vector<TokenSpan>>>;
SpansByKeyphrase PresentSpans(std::span<const Keyphrase> keyphrases,
                              std::span<const Token> tokens,
                              const SpecialTokens& special = {});

// Each keyphrase is selected with probability `p`, drawn from the
// (seed, doc_id, keyphrase) substream. Every occurrence of a selected
// keyphrase becomes one mask token. Where spans of selected keyphrases
// overlap, the earlier-starting one (then the longer one) is masked; the
// pass repeats until no selected keyphrase occurs in the output.
std::vector<Token> KpDropout(std::span<const Token> tokens,
                             const SpansByKeyphrase& spans, double p,
                             uint64_t seed, std::string_view doc_id,
                             const SpecialTokens& special = {});

// Replaces every occurrence of each keyphrase that has a SynonymFor result
// by the synonym tokens; other keyphrases are kept. Overlaps are resolved as
// in KpDropout and spans are rewritten right to left. Keyphrases whose
// synonym stems like the original are replaced once; the others are
// re-matched and replaced again until none remain (bounded by the number of
// keyphrases).
std::vector<Token> KpSynonymReplace(std::span<const Token> tokens,
                                    const SpansByKeyphrase& spans,
                                    const Lexicon& lexicon,
                                    const SpecialTokens& special = {});

// Differing synonyms of a word token that are a single token long.
std::vector<Token> SingleTokenSynonyms(const Lexicon& lexicon, const Token& token,
                                       const SpecialTokens& special = {});

struct SrResult {
  std::vector<Token> tokens;
  // Replaced positions, ascending. Replacement keeps the token count.
  std::vector<size_t> positions;
};

// Replaces min(round(ratio * W), |candidates|) word tokens, W being the
// number of word tokens and candidates the word tokens with a single-token
// synonym. Positions come from the (seed, doc_id) substream.
SrResult SynonymReplaceRandom(std::span<const Token> tokens, double ratio,
                              const Lexicon& lexicon, uint64_t seed,
                              std::string_view doc_id,
                              bool random_synonym = false,
                              const SpecialTokens& special = {});

// Round trip source -> pivot -> source, `batch_size` texts per request.
// Errors name the failing batch.
absl::StatusOr<std::vector<std::string>> RoundTripTexts(
    const std::vector<std::string>& texts, Translator& translator,
    const AugConfig& config);

// Sentence-aligned back-translation. Outputs are normalized and tokenized;
// a sentence whose translation normalizes to nothing is kept as it was.
absl::StatusOr<std::vector<Sentence>> BackTranslate(
    const std::vector<Sentence>& sentences, Translator& translator,
    const AugConfig& config);

// Id of the document a sample was derived from.
std::string SourceId(const Document& doc);

// The augmented sample of one document, or nullopt when it is not eligible.
// `lexicon` is required by SR and KPSR, `translator` by BT.
absl::StatusOr<std::optional<Document>> AugmentDocument(
    const Document& doc, const AugConfig& config, const Lexicon* lexicon,
    Translator* translator);

// All originals in order, then one sample per eligible document in the same
// order. Back-translation requests are batched across documents.
absl::StatusOr<Corpus> AugmentCorpus(const Corpus& corpus,
                                     const AugConfig& config,
                                     const Lexicon* lexicon,
                                     Translator* translator);

}  // namespace kpaug

#endif  // KPAUG_AUGMENT_AUGMENT_H_
