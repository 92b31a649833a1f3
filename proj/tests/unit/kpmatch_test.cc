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

#include <map>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "kpaug/corpus/corpus_io.h"
#include "kpaug/corpus/preprocess.h"
#include "kpaug/kpmatch/kpmatch.h"
#include "kpaug/textnorm/tokenizer.h"

namespace kpaug {
namespace {

std::vector<std::string> Surfaces(const std::vector<Keyphrase>& kps) {
  std::vector<std::string> out;
  for (const Keyphrase& k : kps) out.push_back(k.surface);
  return out;
}

Document TableOneDocument() {
  auto records =
      LoadRawRecords(std::string(KPAUG_DATA_DIR) + "/table1_article.jsonl");
  EXPECT_TRUE(records.ok());
  PreprocessOptions options;
  auto out = Preprocess((*records)[0], options);
  EXPECT_TRUE(std::holds_alternative<Document>(out));
  return std::get<Document>(out);
}

TEST(FindOccurrencesTest, Examples) {
  auto spans = FindOccurrences(
      {"knowledge sharing"},
      Tokenize("the knowledge sharing in the process [SEP] objectives : "
               "knowledge sharing is crucial"));
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0], (TokenSpan{1, 3}));
  EXPECT_EQ(spans[1], (TokenSpan{9, 11}));

  spans = FindOccurrences({"networks"}, Tokenize("network of networks"));
  EXPECT_EQ(spans, (std::vector<TokenSpan>{{0, 1}, {2, 3}}));

  EXPECT_TRUE(FindOccurrences({"absent"}, Tokenize("not here")).empty());
}

TEST(FindOccurrencesTest, HyphenatedKeyphraseMatchesSplitForm) {
  auto spans = FindOccurrences({"knowledge-based system"},
                               Tokenize("a knowledge based system and a "
                                        "knowledge-based systems"));
  EXPECT_EQ(spans, (std::vector<TokenSpan>{{1, 4}, {6, 8}}));
}

TEST(FindOccurrencesTest, NeverCrossesMarkers) {
  EXPECT_TRUE(
      FindOccurrences({"deep learning"}, Tokenize("deep [SEP] learning")).empty());
  EXPECT_TRUE(
      FindOccurrences({"deep learning"}, Tokenize("deep [MASK] learning")).empty());
  EXPECT_EQ(FindOccurrences({"<digit> layers"}, Tokenize("<digit> layers")).size(),
            1u);
}

TEST(FindOccurrencesTest, GreedyLeftToRight) {
  auto spans = FindOccurrences({"a a"}, Tokenize("a a a a a"));
  EXPECT_EQ(spans, (std::vector<TokenSpan>{{0, 2}, {2, 4}}));
}

// Words grouped by their Porter stem, written down by hand.
const std::vector<std::vector<std::string>>& StemClasses() {
  static const auto* classes = new std::vector<std::vector<std::string>>{
      {"network", "networks"},
      {"connect", "connected", "connecting", "connection"},
      {"model", "models"},
      {"learn", "learning", "learns"},
      {"graph", "graphs"},
      {"system", "systems"},
      {"train", "training", "trained"},
      {"data"},
      {"deep"},
      {"process", "processes"},
  };
  return *classes;
}

// Oracle: every window whose stem classes equal the phrase's, then keep
// windows left to right that do not overlap an earlier kept one.
std::vector<TokenSpan> BruteForce(const std::vector<int>& kp,
                                  const std::vector<int>& text) {
  std::vector<TokenSpan> all;
  for (size_t s = 0; s + kp.size() <= text.size(); ++s) {
    bool ok = true;
    for (size_t i = 0; i < kp.size(); ++i) {
      if (text[s + i] != kp[i]) ok = false;  // -1 (delimiter) never equals
    }
    if (ok) all.push_back({s, s + kp.size()});
  }
  std::vector<TokenSpan> kept;
  for (const TokenSpan& w : all) {
    if (kept.empty() || w.start >= kept.back().end) kept.push_back(w);
  }
  return kept;
}

TEST(FindOccurrencesTest, MatchesBruteForceOracle) {
  std::mt19937_64 gen(42);
  const auto& classes = StemClasses();
  auto pick = [&](int cls) {
    const auto& words = classes[static_cast<size_t>(cls)];
    return words[gen() % words.size()];
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const int alphabet = 1 + static_cast<int>(gen() % classes.size());
    std::vector<int> text_cls(gen() % 51);
    std::string text;
    for (int& c : text_cls) {
      if (gen() % 12 == 0) {
        c = -1;
        text += "[SEP] ";
      } else {
        c = static_cast<int>(gen() % alphabet);
        text += pick(c) + " ";
      }
    }
    std::vector<int> kp_cls(1 + gen() % 3);
    std::string kp;
    for (int& c : kp_cls) {
      c = static_cast<int>(gen() % alphabet);
      kp += (kp.empty() ? "" : " ") + pick(c);
    }
    EXPECT_EQ(FindOccurrences({kp}, Tokenize(text)), BruteForce(kp_cls, text_cls))
        << "kp=" << kp << " text=" << text;
  }
}

TEST(ClassifyTest, TableOneTitleAbstract) {
  Document doc = TableOneDocument();
  PresenceSplit split = Classify(doc, PartSet::TitleAbstract());
  EXPECT_EQ(Surfaces(split.present),
            (std::vector<std::string>{"medical prescription",
                                      "knowledge-based system",
                                      "knowledge sharing"}));
  EXPECT_EQ(Surfaces(split.absent),
            (std::vector<std::string>{"case-based reasoning",
                                      "bayesian theorem"}));
}

TEST(ClassifyTest, ScopeMonotonicity) {
  Document doc = TableOneDocument();
  PresenceSplit ta = Classify(doc, PartSet::TitleAbstract());
  PresenceSplit full = Classify(doc, PartSet::FullText());
  for (const Keyphrase& kp : ta.present) {
    EXPECT_NE(std::find(full.present.begin(), full.present.end(), kp),
              full.present.end())
        << kp.surface;
  }
  EXPECT_EQ(full.present.size(), 5u);

  doc.keyphrases.clear();
  PresenceSplit none = Classify(doc, PartSet::FullText());
  EXPECT_TRUE(none.present.empty() && none.absent.empty());
}

TEST(ClassifyTest, BodySentencesDoNotJoin) {
  Document doc;
  doc.title.tokens = Tokenize("t");
  doc.abstract = {Sentence{Tokenize("ends with deep")},
                  Sentence{Tokenize("learning starts here")}};
  doc.body = {Sentence{Tokenize("graph")}, Sentence{Tokenize("models")}};
  doc.keyphrases = {{"deep learning"}, {"graph model"}};
  PresenceSplit split = Classify(doc, PartSet::FullText());
  EXPECT_EQ(Surfaces(split.present), (std::vector<std::string>{"deep learning"}));
  EXPECT_EQ(Surfaces(split.absent), (std::vector<std::string>{"graph model"}));
}

}  // namespace
}  // namespace kpaug
