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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "kpaug/metrics/metrics.h"
#include "kpaug/textnorm/tokenizer.h"

namespace kpaug {
namespace {

using Strings = std::vector<std::string>;

TEST(DedupStemmedTest, Examples) {
  EXPECT_EQ(DedupStemmed(Strings{"networks", "network"}), Strings{"networks"});
  EXPECT_EQ(DedupStemmed(Strings{}), Strings{});
  EXPECT_EQ(DedupStemmed(Strings{"a b", "x", "c"}), (Strings{"a b", "x", "c"}));
  EXPECT_EQ(DedupStemmed(Strings{"Deep Nets", "deep net", "", "<b></b>", "nets"}),
            (Strings{"Deep Nets", "nets"}));
}

TEST(ScoreDocTest, WorkedExamples) {
  Strings preds = {"a b", "x", "c"};
  Strings gold = {"a b", "c"};
  Prf m = ScoreDoc(preds, gold, kCutoffM);
  EXPECT_DOUBLE_EQ(m.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.recall, 1.0);
  EXPECT_EQ(m.f1, 0.8);
  Prf at5 = ScoreDoc(preds, gold, 5);
  EXPECT_DOUBLE_EQ(at5.precision, 2.0 / 5.0);
  EXPECT_DOUBLE_EQ(at5.recall, 1.0);
  EXPECT_EQ(at5.f1, 4.0 / 7.0);

  Strings five = {"a", "b", "c", "d", "e"};
  EXPECT_DOUBLE_EQ(ScoreDoc(five, five, 5).f1, 1.0);
  EXPECT_DOUBLE_EQ(ScoreDoc(Strings{}, gold, kCutoffM).f1, 0.0);
  EXPECT_DOUBLE_EQ(ScoreDoc(Strings{}, gold, kCutoffM).precision, 0.0);
}

// Stem classes written out by hand; the oracle compares class ids.
const std::vector<Strings>& Classes() {
  static const auto* classes = new std::vector<Strings>{
      {"network", "networks"}, {"model", "models"}, {"graph", "graphs"},
      {"learn", "learning"},   {"train", "training"}, {"deep"},
      {"data"},                {"system", "systems"}, {"query", "queries"},
      {"index", "indexes"},
  };
  return *classes;
}

struct Phrase {
  std::string text;
  std::vector<int> key;
};

Phrase RandomPhrase(std::mt19937_64& gen, int max_len) {
  Phrase p;
  const int len = 1 + static_cast<int>(gen() % static_cast<uint64_t>(max_len));
  for (int i = 0; i < len; ++i) {
    const int c = static_cast<int>(gen() % Classes().size());
    const auto& words = Classes()[static_cast<size_t>(c)];
    p.text += (i ? " " : "") + words[gen() % words.size()];
    p.key.push_back(c);
  }
  return p;
}

struct OracleScores {
  double p5 = 0, r5 = 0, f5 = 0, pm = 0, rm = 0, fm = 0;
};

// Scores every (prediction, gold) pair with no shortcuts.
OracleScores OracleDoc(const std::vector<std::vector<int>>& preds,
                       const std::vector<std::vector<int>>& gold) {
  OracleScores s;
  auto f1 = [](double p, double r) { return p + r > 0 ? 2 * p * r / (p + r) : 0.0; };
  for (int cut : {5, 0}) {
    std::set<size_t> credited;
    double correct = 0;
    const size_t n = cut ? std::min<size_t>(5, preds.size()) : preds.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t g = 0; g < gold.size(); ++g) {
        if (preds[i] == gold[g] && !credited.count(g)) {
          credited.insert(g);
          correct += 1;
          break;
        }
      }
    }
    const double denom = cut ? 5.0 : static_cast<double>(preds.size());
    const double p = denom > 0 ? correct / denom : 0;
    const double r = correct / static_cast<double>(gold.size());
    if (cut) {
      s.p5 = p, s.r5 = r, s.f5 = f1(p, r);
    } else {
      s.pm = p, s.rm = r, s.fm = f1(p, r);
    }
  }
  return s;
}

std::vector<std::vector<int>> DedupKeys(const std::vector<Phrase>& phrases) {
  std::vector<std::vector<int>> out;
  for (const Phrase& p : phrases) {
    if (std::find(out.begin(), out.end(), p.key) == out.end()) out.push_back(p.key);
  }
  return out;
}

bool Contains(const std::vector<int>& text, const std::vector<int>& key) {
  for (size_t s = 0; s + key.size() <= text.size(); ++s) {
    if (std::equal(key.begin(), key.end(), text.begin() + s)) return true;
  }
  return false;
}

TEST(ScoreDocTest, MatchesOracleOnFuzzedInstances) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Phrase> gold_p, pred_p;
    for (int i = 1 + static_cast<int>(gen() % 6); i > 0; --i) {
      gold_p.push_back(RandomPhrase(gen, 2));
    }
    for (int i = static_cast<int>(gen() % 12); i > 0; --i) {
      pred_p.push_back(RandomPhrase(gen, 2));
    }
    Strings gold_text, pred_text;
    for (const Phrase& p : gold_p) gold_text.push_back(p.text);
    for (const Phrase& p : pred_p) pred_text.push_back(p.text);
    Strings gold_keys, pred_keys;
    for (const std::string& s : DedupStemmed(gold_text)) gold_keys.push_back(StemKey(s));
    for (const std::string& s : DedupStemmed(pred_text)) pred_keys.push_back(StemKey(s));

    OracleScores o = OracleDoc(DedupKeys(pred_p), DedupKeys(gold_p));
    Prf at5 = ScoreDoc(pred_keys, gold_keys, 5);
    Prf atm = ScoreDoc(pred_keys, gold_keys, kCutoffM);
    EXPECT_NEAR(at5.precision, o.p5, 1e-12);
    EXPECT_NEAR(at5.recall, o.r5, 1e-12);
    EXPECT_NEAR(at5.f1, o.f5, 1e-12);
    EXPECT_NEAR(atm.precision, o.pm, 1e-12);
    EXPECT_NEAR(atm.recall, o.rm, 1e-12);
    EXPECT_NEAR(atm.f1, o.fm, 1e-12);

    // Properties.
    EXPECT_LE(at5.recall, atm.recall);
    EXPECT_DOUBLE_EQ(atm.f1, F1Score(atm.precision, atm.recall));
    Strings shuffled = pred_keys;
    if (shuffled.size() > 5) {
      std::shuffle(shuffled.begin() + 5, shuffled.end(), gen);
      EXPECT_EQ(ScoreDoc(shuffled, gold_keys, 5).f1, at5.f1);
    }
    Strings doubled = pred_text;
    doubled.insert(doubled.end(), pred_text.begin(), pred_text.end());
    Strings doubled_keys;
    for (const std::string& s : DedupStemmed(doubled)) doubled_keys.push_back(StemKey(s));
    EXPECT_EQ(ScoreDoc(doubled_keys, gold_keys, kCutoffM).f1, atm.f1);
  }
}

Document DocFromTitle(const std::string& id, const std::string& title,
                      const std::vector<std::string>& kps) {
  Document doc;
  doc.id = id;
  doc.title.tokens = Tokenize(title);
  for (const std::string& k : kps) doc.keyphrases.push_back({k});
  return doc;
}

TEST(EvaluateTest, MatchesOracleOnSyntheticCorpus) {
  std::mt19937_64 gen(123);
  for (int round = 0; round < 5; ++round) {
    Corpus corpus;
    std::vector<PredictionSet> preds;
    OracleScores sum_present, sum_absent;
    int n_present = 0, n_absent = 0;
    for (int d = 0; d < 200; ++d) {
      Phrase title = RandomPhrase(gen, 12);
      std::vector<Phrase> gold;
      std::vector<std::string> gold_text;
      for (int i = 1 + static_cast<int>(gen() % 5); i > 0; --i) {
        // Half the gold is taken from the title so both categories occur.
        Phrase g = RandomPhrase(gen, 2);
        if (gen() % 2 && title.key.size() >= 2) {
          size_t at = gen() % (title.key.size() - 1);
          size_t len = 1 + gen() % 2;
          g.key.assign(title.key.begin() + at, title.key.begin() + at + len);
          g.text.clear();
          for (int c : g.key) {
            g.text += (g.text.empty() ? "" : " ") + Classes()[static_cast<size_t>(c)][0];
          }
        }
        if (std::find_if(gold.begin(), gold.end(), [&](const Phrase& x) {
              return x.key == g.key;
            }) != gold.end()) {
          continue;
        }
        gold.push_back(g);
        gold_text.push_back(g.text);
      }
      const std::string id = "d" + std::to_string(d);
      corpus.documents.push_back(DocFromTitle(id, title.text, gold_text));
      std::vector<Phrase> pred;
      PredictionSet set{id, {}};
      for (int i = static_cast<int>(gen() % 10); i > 0; --i) {
        pred.push_back(gen() % 3 == 0 ? gold[gen() % gold.size()]
                                      : RandomPhrase(gen, 2));
        set.predictions.push_back(pred.back().text);
      }
      if (d % 17 != 0) preds.push_back(set);  // some documents unpredicted
      else pred.clear();

      std::vector<std::vector<int>> gp, ga, pp, pa;
      for (const auto& k : DedupKeys(gold)) (Contains(title.key, k) ? gp : ga).push_back(k);
      for (const auto& k : DedupKeys(pred)) (Contains(title.key, k) ? pp : pa).push_back(k);
      auto add = [](OracleScores& acc, const OracleScores& s) {
        acc.p5 += s.p5, acc.r5 += s.r5, acc.f5 += s.f5;
        acc.pm += s.pm, acc.rm += s.rm, acc.fm += s.fm;
      };
      if (!gp.empty()) add(sum_present, OracleDoc(pp, gp)), ++n_present;
      if (!ga.empty()) add(sum_absent, OracleDoc(pa, ga)), ++n_absent;
    }
    auto report = Evaluate(corpus, preds);
    ASSERT_TRUE(report.ok()) << report.status();
    auto check = [](const CategoryScores& got, const OracleScores& sum, int n) {
      ASSERT_EQ(got.n_docs_scored, static_cast<size_t>(n));
      EXPECT_NEAR(got.macro_p_at_5, sum.p5 / n, 1e-12);
      EXPECT_NEAR(got.macro_r_at_5, sum.r5 / n, 1e-12);
      EXPECT_NEAR(got.macro_f1_at_5, sum.f5 / n, 1e-12);
      EXPECT_NEAR(got.macro_p_at_m, sum.pm / n, 1e-12);
      EXPECT_NEAR(got.macro_r_at_m, sum.rm / n, 1e-12);
      EXPECT_NEAR(got.macro_f1_at_m, sum.fm / n, 1e-12);
    };
    check(report->present, sum_present, n_present);
    check(report->absent, sum_absent, n_absent);
  }
}

TEST(EvaluateTest, PerfectPresentAndMacroMean) {
  Corpus corpus;
  corpus.documents.push_back(DocFromTitle("a", "graph models for deep data",
                                          {"graph models", "deep data"}));
  std::vector<PredictionSet> preds = {{"a", {"graph model", "deep data"}}};
  auto report = Evaluate(corpus, preds);
  ASSERT_TRUE(report.ok());
  EXPECT_DOUBLE_EQ(report->present.macro_f1_at_m, 1.0);
  EXPECT_EQ(report->absent.n_docs_scored, 0u);

  // F1@M of 0.8 (P=2/3, R=1) and 0.4 (P=1/2, R=1/3) average to 0.6.
  corpus.documents = {
      DocFromTitle("x", "a b c d e", {"a b", "c"}),
      DocFromTitle("y", "a b c d e", {"a", "b", "c"}),
  };
  preds = {{"x", {"a b", "d", "c"}}, {"y", {"a", "e"}}};
  report = Evaluate(corpus, preds);
  ASSERT_TRUE(report.ok());
  EXPECT_NEAR(report->present.macro_f1_at_m, 0.6, 1e-15);
}

TEST(EvaluateTest, UnknownIdsAreListed) {
  Corpus corpus;
  corpus.documents.push_back(DocFromTitle("a", "t", {"t"}));
  std::vector<PredictionSet> preds = {{"zz", {}}, {"a", {}}, {"yy", {}}};
  auto report = Evaluate(corpus, preds);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(std::string(report.status().message()).find("zz, yy"),
            std::string::npos);
}

TEST(EvaluateTest, UnsplitPredictions) {
  Corpus corpus;
  corpus.documents.push_back(DocFromTitle("a", "graph models", {"graph models", "deep data"}));
  std::vector<PredictionSet> preds = {{"a", {"deep data", "graph models"}}};
  EvalOptions options;
  options.split_predictions = false;
  auto report = Evaluate(corpus, preds, options);
  ASSERT_TRUE(report.ok());
  EXPECT_DOUBLE_EQ(report->present.macro_p_at_m, 0.5);
  EXPECT_DOUBLE_EQ(report->absent.macro_p_at_m, 0.5);
  report = Evaluate(corpus, preds);
  EXPECT_DOUBLE_EQ(report->present.macro_p_at_m, 1.0);
  EXPECT_DOUBLE_EQ(report->absent.macro_p_at_m, 1.0);
}

}  // namespace
}  // namespace kpaug
