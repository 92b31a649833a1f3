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
#ifndef KPAUG_METRICS_METRICS_H_
#define KPAUG_METRICS_METRICS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "kpaug/corpus/document.h"
#include "kpaug/util/jsonl.h"

namespace kpaug {

// Model output for one document, in rank order.
struct PredictionSet {
  std::string doc_id;
  std::vector<std::string> predictions;
  bool operator==(const PredictionSet&) const = default;
};

// One {"id": ..., "predictions": [...]} record per line. Repeated ids are an
// error.
absl::StatusOr<std::vector<PredictionSet>> LoadPredictions(
    const std::string& path);
absl::Status SavePredictions(std::span<const PredictionSet> sets,
                             const std::string& path);

// Comparison key of a phrase: normalized, tokenized, each token stemmed,
// joined by single spaces. Empty when nothing survives normalization.
std::string StemKey(std::string_view phrase, const SpecialTokens& special = {});

// First phrase of every stem key, in order. Phrases with an empty key are
// dropped.
std::vector<std::string> DedupStemmed(std::span<const std::string> phrases,
                                      const SpecialTokens& special = {});

struct Prf {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Cutoff meaning "all predictions" (F1@M).
inline constexpr size_t kCutoffM = 0;

double F1Score(double precision, double recall);

// `predictions` and `gold` are deduplicated stem keys; gold is non-empty.
// Each gold key is credited at most once. With cutoff k > 0 only the first k
// predictions count and precision divides by k even when fewer exist.
Prf ScoreDoc(std::span<const std::string> predictions,
             std::span<const std::string> gold, size_t cutoff);

struct CategoryScores {
  size_t n_docs_scored = 0;
  double macro_p_at_5 = 0;
  double macro_r_at_5 = 0;
  double macro_f1_at_5 = 0;
  double macro_p_at_m = 0;
  double macro_r_at_m = 0;
  double macro_f1_at_m = 0;
  Json ToJson() const;
};

struct EvalReport {
  CategoryScores present;
  CategoryScores absent;
  Json ToJson() const;
};

struct EvalOptions {
  PartSet scope = PartSet::TitleAbstract();
  SpecialTokens special;
  // Score present gold only against predictions found in the scoped text and
  // absent gold only against the rest. When false every prediction is scored
  // against both categories.
  bool split_predictions = true;
};

// Gold keyphrases are split by Classify(doc, scope). Per category, documents
// with no gold in that category are skipped and the rest macro-averaged.
// Documents without a prediction entry score as empty predictions.
absl::StatusOr<EvalReport> Evaluate(const Corpus& corpus,
                                    std::span<const PredictionSet> predictions,
                                    const EvalOptions& options = {});

}  // namespace kpaug

#endif  // KPAUG_METRICS_METRICS_H_
