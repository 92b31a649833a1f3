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

#include "kpaug/analyze/analyze.h"

#include <algorithm>

#include "fmt/format.h"
#include "kpaug/corpus/flatten.h"
#include "kpaug/kpmatch/kpmatch.h"

namespace kpaug {

std::string FormatTable(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += c == 0 ? fmt::format("{:<{}}", row[c], widths[c])
                     : fmt::format("{:>{}}", row[c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

Json StatsReport::ToJson() const {
  return Json{{"n_docs", n_docs},         {"avg_words", avg_words},
              {"avg_kp", avg_kp},         {"avg_kp_len", avg_kp_len},
              {"pct_present", pct_present}, {"pct_absent", pct_absent}};
}

std::string StatsReport::ToTable() const {
  return FormatTable({
      {"docs", "avg_words", "avg_kp", "avg_kp_len", "pct_present", "pct_absent"},
      {std::to_string(n_docs), fmt::format("{:.2f}", avg_words),
       fmt::format("{:.2f}", avg_kp), fmt::format("{:.2f}", avg_kp_len),
       fmt::format("{:.2f}", pct_present), fmt::format("{:.2f}", pct_absent)},
  });
}

absl::StatusOr<StatsReport> CorpusStats(const Corpus& corpus,
                                        const StatsOptions& options) {
  if (corpus.empty()) return absl::InvalidArgumentError("corpus is empty");
  if (options.scope.empty()) return absl::InvalidArgumentError("empty scope");
  FlattenOptions flatten{options.special, kNoWordCap};
  size_t words = 0, kps = 0, kp_tokens = 0, present = 0;
  for (const Document& doc : corpus.documents) {
    words += CountWords(FlattenTokens(doc, PartSet::FullText(), flatten),
                        options.special);
    kps += doc.keyphrases.size();
    for (const Keyphrase& kp : doc.keyphrases) {
      kp_tokens += kp.Tokens(options.special).size();
    }
    present += Classify(doc, options.scope, options.special).present.size();
  }
  if (kps == 0) return absl::InvalidArgumentError("corpus has no keyphrases");
  StatsReport r;
  r.n_docs = corpus.size();
  const double n = static_cast<double>(corpus.size());
  r.avg_words = static_cast<double>(words) / n;
  r.avg_kp = static_cast<double>(kps) / n;
  r.avg_kp_len = static_cast<double>(kp_tokens) / static_cast<double>(kps);
  r.pct_present = 100.0 * static_cast<double>(present) / static_cast<double>(kps);
  r.pct_absent =
      100.0 * static_cast<double>(kps - present) / static_cast<double>(kps);
  return r;
}

KPCounts& KPCounts::operator+=(const KPCounts& other) {
  present += other.present;
  absent += other.absent;
  total += other.total;
  return *this;
}

Json KPCounts::ToJson() const {
  return Json{{"present", present}, {"absent", absent}, {"total", total}};
}

std::string KPCounts::ToTable() const {
  return FormatTable({{"present", "absent", "total"},
                      {std::to_string(present), std::to_string(absent),
                       std::to_string(total)}});
}

KPCounts AugmentationAudit(const Corpus& corpus, const AuditOptions& options) {
  KPCounts counts;
  for (const Document& doc : corpus.documents) {
    const PartSet scope = doc.provenance == Provenance::kOriginal
                              ? options.original_scope
                              : SampleParts(doc.provenance);
    PresenceSplit split = Classify(doc, scope, options.special);
    counts += {split.present.size(), split.absent.size(),
               doc.keyphrases.size()};
  }
  return counts;
}

Json SynonymCoverage::ToJson() const {
  return Json{{"replaced", replaced}, {"total", total}};
}

std::string SynonymCoverage::ToTable() const {
  return FormatTable({{"replaced", "total"},
                      {std::to_string(replaced), std::to_string(total)}});
}

absl::StatusOr<SynonymCoverage> ComputeSynonymCoverage(const Corpus& corpus,
                                                       const Lexicon& lexicon,
                                                       const AugConfig& config) {
  if (StrategyTransform(config.strategy) != Transform::kKpsr) {
    return absl::InvalidArgumentError(
        fmt::format("coverage needs a KPSR strategy, got {}",
                    StrategyName(config.strategy)));
  }
  SynonymCoverage cov;
  for (const Document& doc : corpus.documents) {
    if (doc.provenance != Provenance::kOriginal) continue;
    std::optional<std::vector<Token>> target =
        SelectTarget(doc, config.strategy, config);
    if (!target) continue;
    PresenceSplit split = ClassifyTokens(doc.keyphrases, *target, config.special);
    for (const Keyphrase& kp : split.present) {
      ++cov.total;
      if (SynonymFor(lexicon, kp.Tokens(config.special), config.special)) {
        ++cov.replaced;
      }
    }
  }
  return cov;
}

}  // namespace kpaug
