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

#ifndef KPAUG_ANALYZE_ANALYZE_H_
#define KPAUG_ANALYZE_ANALYZE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kpaug/augment/augment.h"
#include "kpaug/corpus/document.h"
#include "kpaug/lexicon/lexicon.h"
#include "kpaug/util/jsonl.h"

namespace kpaug {

struct StatsReport {
  size_t n_docs = 0;
  double avg_words = 0;
  double avg_kp = 0;
  double avg_kp_len = 0;
  double pct_present = 0;
  double pct_absent = 0;

  Json ToJson() const;
  std::string ToTable() const;
};

struct StatsOptions {
  PartSet scope = PartSet::FullText();
  SpecialTokens special;
};

// Word counts cover the whole document with delimiters excluded. Averages
// are per document, percentages per keyphrase. Errors on an empty corpus or
// one without any keyphrase.
absl::StatusOr<StatsReport> CorpusStats(const Corpus& corpus,
                                        const StatsOptions& options = {});

struct KPCounts {
  size_t present = 0;
  size_t absent = 0;
  size_t total = 0;

  KPCounts& operator+=(const KPCounts& other);
  bool operator==(const KPCounts&) const = default;
  Json ToJson() const;
  std::string ToTable() const;
};

struct AuditOptions {
  // Text an original is classified against. Augmented samples always use the
  // parts their provenance says they hold.
  PartSet original_scope = PartSet::TitleAbstract();
  SpecialTokens special;
};

KPCounts AugmentationAudit(const Corpus& corpus, const AuditOptions& options = {});

struct SynonymCoverage {
  // (document, present keyphrase) pairs in the strategy's target text, and
  // those for which the lexicon has a synonym.
  size_t replaced = 0;
  size_t total = 0;

  Json ToJson() const;
  std::string ToTable() const;
};

// Only originals are counted; `config.strategy` must be a KPSR variant.
absl::StatusOr<SynonymCoverage> ComputeSynonymCoverage(const Corpus& corpus,
                                                       const Lexicon& lexicon,
                                                       const AugConfig& config);

// Left-aligned first column, right-aligned others, two-space gutters.
std::string FormatTable(const std::vector<std::vector<std::string>>& rows);

}  // namespace kpaug

#endif  // KPAUG_ANALYZE_ANALYZE_H_
