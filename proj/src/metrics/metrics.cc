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

#include "kpaug/metrics/metrics.h"

#include <map>
#include <unordered_map>
#include <unordered_set>

#include "kpaug/corpus/flatten.h"
#include "kpaug/kpmatch/kpmatch.h"
#include "kpaug/textnorm/normalizer.h"
#include "kpaug/textnorm/porter_stemmer.h"
#include "kpaug/textnorm/tokenizer.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

struct Sums {
  size_t n = 0;
  double p5 = 0, r5 = 0, f5 = 0, pm = 0, rm = 0, fm = 0;

  void Add(std::span<const std::string> predictions,
           std::span<const std::string> gold) {
    const Prf at5 = ScoreDoc(predictions, gold, 5);
    const Prf atm = ScoreDoc(predictions, gold, kCutoffM);
    ++n;
    p5 += at5.precision;
    r5 += at5.recall;
    f5 += at5.f1;
    pm += atm.precision;
    rm += atm.recall;
    fm += atm.f1;
  }

  CategoryScores Average() const {
    CategoryScores s;
    s.n_docs_scored = n;
    if (n == 0) return s;
    const double d = static_cast<double>(n);
    s.macro_p_at_5 = p5 / d;
    s.macro_r_at_5 = r5 / d;
    s.macro_f1_at_5 = f5 / d;
    s.macro_p_at_m = pm / d;
    s.macro_r_at_m = rm / d;
    s.macro_f1_at_m = fm / d;
    return s;
  }
};

std::vector<std::string> Keys(std::span<const Keyphrase> kps,
                              const SpecialTokens& special) {
  std::vector<std::string> surfaces;
  for (const Keyphrase& kp : kps) surfaces.push_back(kp.surface);
  std::vector<std::string> keys;
  for (const std::string& s : DedupStemmed(surfaces, special)) {
    keys.push_back(StemKey(s, special));
  }
  return keys;
}

}  // namespace

absl::StatusOr<std::vector<PredictionSet>> LoadPredictions(
    const std::string& path) {
  std::vector<PredictionSet> sets;
  std::map<std::string, int> seen;
  absl::Status status =
      ForEachJsonLine(path, [&](const Json& record, int line) -> absl::Status {
        PredictionSet set;
        if (!record.contains("id") || !record["id"].is_string()) {
          return absl::InvalidArgumentError("missing string field 'id'");
        }
        set.doc_id = record["id"].get<std::string>();
        if (!record.contains("predictions") ||
            !record["predictions"].is_array()) {
          return absl::InvalidArgumentError("missing array field 'predictions'");
        }
        for (const Json& p : record["predictions"]) {
          if (!p.is_string()) {
            return absl::InvalidArgumentError("predictions must be strings");
          }
          set.predictions.push_back(p.get<std::string>());
        }
        if (auto [it, inserted] = seen.emplace(set.doc_id, line); !inserted) {
          return absl::InvalidArgumentError(
              StrCat("duplicate id '", set.doc_id, "' (first on line ",
                     it->second, ")"));
        }
        sets.push_back(std::move(set));
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return sets;
}

absl::Status SavePredictions(std::span<const PredictionSet> sets,
                             const std::string& path) {
  std::vector<Json> records;
  records.reserve(sets.size());
  for (const PredictionSet& s : sets) {
    records.push_back(Json{{"id", s.doc_id}, {"predictions", s.predictions}});
  }
  return WriteJsonLines(path, records);
}

std::string StemKey(std::string_view phrase, const SpecialTokens& special) {
  return JoinStrings(StemTokens(Tokenize(Normalize(phrase, special), special)),
                     " ");
}

std::vector<std::string> DedupStemmed(std::span<const std::string> phrases,
                                      const SpecialTokens& special) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const std::string& p : phrases) {
    std::string key = StemKey(p, special);
    if (key.empty() || !seen.insert(std::move(key)).second) continue;
    out.push_back(p);
  }
  return out;
}

double F1Score(double precision, double recall) {
  if (precision + recall == 0) return 0;
  return 2 * precision * recall / (precision + recall);
}

Prf ScoreDoc(std::span<const std::string> predictions,
             std::span<const std::string> gold, size_t cutoff) {
  Prf out;
  if (gold.empty()) return out;
  const size_t considered =
      cutoff == kCutoffM ? predictions.size() : std::min(cutoff, predictions.size());
  std::vector<bool> used(gold.size(), false);
  size_t correct = 0;
  for (size_t i = 0; i < considered; ++i) {
    for (size_t g = 0; g < gold.size(); ++g) {
      if (!used[g] && gold[g] == predictions[i]) {
        used[g] = true;
        ++correct;
        break;
      }
    }
  }
  const size_t denominator = cutoff == kCutoffM ? predictions.size() : cutoff;
  out.precision = denominator == 0 ? 0
                                   : static_cast<double>(correct) /
                                         static_cast<double>(denominator);
  out.recall = static_cast<double>(correct) / static_cast<double>(gold.size());
  // 2PR/(P+R) reduced to counts: one rounding, so 4/7 comes out as 4/7.
  out.f1 = correct == 0 ? 0
                        : 2.0 * static_cast<double>(correct) /
                              static_cast<double>(denominator + gold.size());
  return out;
}

Json CategoryScores::ToJson() const {
  return Json{{"n_docs_scored", n_docs_scored},
              {"macro_f1_at_5", macro_f1_at_5},
              {"macro_f1_at_m", macro_f1_at_m},
              {"macro_p", macro_p_at_m},
              {"macro_r", macro_r_at_m},
              {"macro_p_at_5", macro_p_at_5},
              {"macro_r_at_5", macro_r_at_5}};
}

Json EvalReport::ToJson() const {
  return Json{{"present", present.ToJson()}, {"absent", absent.ToJson()}};
}

absl::StatusOr<EvalReport> Evaluate(const Corpus& corpus,
                                    std::span<const PredictionSet> predictions,
                                    const EvalOptions& options) {
  const SpecialTokens& special = options.special;
  std::unordered_map<std::string, const PredictionSet*> by_id;
  for (const PredictionSet& p : predictions) by_id.emplace(p.doc_id, &p);
  std::unordered_set<std::string> corpus_ids;
  for (const Document& d : corpus.documents) corpus_ids.insert(d.id);
  std::vector<std::string> unknown;
  for (const PredictionSet& p : predictions) {
    if (corpus_ids.count(p.doc_id) == 0) unknown.push_back(p.doc_id);
  }
  if (!unknown.empty()) {
    return absl::InvalidArgumentError(StrCat(
        "predictions for ids not in the corpus: ", JoinStrings(unknown, ", ")));
  }

  FlattenOptions flatten;
  flatten.special = special;
  flatten.max_body_words = kNoWordCap;
  Sums present, absent;
  for (const Document& doc : corpus.documents) {
    const std::vector<Token> text = FlattenTokens(doc, options.scope, flatten);
    PresenceSplit gold = ClassifyTokens(doc.keyphrases, text, special);
    std::vector<std::string> preds;
    if (auto it = by_id.find(doc.id); it != by_id.end()) {
      preds = DedupStemmed(it->second->predictions, special);
    }
    std::vector<std::string> pred_present, pred_absent;
    Matcher matcher(text, special);
    for (const std::string& p : preds) {
      const std::string key = StemKey(p, special);
      const bool found =
          matcher.Contains(Tokenize(Normalize(p, special), special));
      if (!options.split_predictions || found) pred_present.push_back(key);
      if (!options.split_predictions || !found) pred_absent.push_back(key);
    }
    const std::vector<std::string> gold_present = Keys(gold.present, special);
    const std::vector<std::string> gold_absent = Keys(gold.absent, special);
    if (!gold_present.empty()) present.Add(pred_present, gold_present);
    if (!gold_absent.empty()) absent.Add(pred_absent, gold_absent);
  }
  return EvalReport{present.Average(), absent.Average()};
}

}  // namespace kpaug
