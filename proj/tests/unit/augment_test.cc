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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "kpaug/augment/augment.h"
#include "kpaug/corpus/corpus_io.h"
#include "kpaug/corpus/flatten.h"
#include "kpaug/corpus/preprocess.h"
#include "kpaug/textnorm/porter_stemmer.h"
#include "kpaug/textnorm/tokenizer.h"
#include "kpaug/translate/mock_translator.h"

namespace kpaug {
namespace {

std::string DataPath(const std::string& name) {
  return std::string(KPAUG_DATA_DIR) + "/" + name;
}

Document TableOneDocument() {
  auto records = LoadRawRecords(DataPath("table1_article.jsonl"));
  EXPECT_TRUE(records.ok());
  PreprocessOptions options;
  return std::get<Document>(Preprocess((*records)[0], options));
}

Lexicon TableOneLexicon() {
  auto lex = Lexicon::Load(DataPath("table1_lexicon.tsv"));
  EXPECT_TRUE(lex.ok());
  return *lex;
}

Corpus ToyCorpus() {
  auto records = LoadRawRecords(DataPath("toy_corpus.jsonl"));
  EXPECT_TRUE(records.ok());
  PreprocessOptions options;
  return Ingest(*records, options).corpus;
}

std::string SampleText(const Document& sample) {
  return FlattenInput(sample, SampleParts(sample.provenance));
}

Document Augment(const Document& doc, AugConfig config, const Lexicon* lexicon,
                 Translator* translator = nullptr) {
  auto out = AugmentDocument(doc, config, lexicon, translator);
  EXPECT_TRUE(out.ok()) << out.status();
  EXPECT_TRUE(out->has_value());
  return **out;
}

TEST(StrategyTest, NamesRoundTrip) {
  for (Strategy s : AllStrategies()) {
    auto parsed = ParseStrategy(StrategyName(s));
    ASSERT_TRUE(parsed.ok());
    EXPECT_EQ(*parsed, s);
    EXPECT_EQ(ProvenanceName(StrategyProvenance(s)),
              "aug_" + std::string(StrategyName(s)));
  }
  EXPECT_FALSE(ParseStrategy("ta").ok());
}

TEST(AugConfigTest, DefaultsAndOverrides) {
  AugConfig config;
  EXPECT_EQ(config.kpd_prob, 0.7);
  EXPECT_EQ(config.sr_ratio, 0.10);
  EXPECT_EQ(config.special.mask, "[MASK]");
  EXPECT_EQ(config.pivot_language, "fr");
  EXPECT_EQ(config.temperature, 0.7);
  EXPECT_TRUE(config.Validate().ok());

  EXPECT_TRUE(config.ApplyJson(Json{{"kpd_prob", 1.0}, {"mask_token", "<m>"}}).ok());
  EXPECT_EQ(config.kpd_prob, 1.0);
  EXPECT_EQ(config.special.mask, "<m>");
  EXPECT_FALSE(config.ApplyJson(Json{{"sr_ratio", 1.5}}).ok());
  EXPECT_FALSE(config.ApplyJson(Json{{"nope", 1}}).ok());
  EXPECT_FALSE(config.ApplyJson(Json{{"kpd_prob", "high"}}).ok());

  AugConfig round;
  ASSERT_TRUE(round.ApplyJson(config.ToJson()).ok());
  EXPECT_EQ(round.ToJson(), config.ToJson());
}

TEST(SelectTargetTest, PartsAndSkip) {
  Document doc = TableOneDocument();
  AugConfig config;
  auto ta = SelectTarget(doc, Strategy::kTaKpd, config);
  ASSERT_TRUE(ta);
  EXPECT_EQ(JoinTokens(*ta), FlattenInput(doc, PartSet::TitleAbstract()));
  auto body = SelectTarget(doc, Strategy::kBodySr, config);
  ASSERT_TRUE(body);
  EXPECT_EQ(JoinTokens(*body), FlattenInput(doc, PartSet::Body()));
  doc.body.clear();
  EXPECT_FALSE(SelectTarget(doc, Strategy::kBody, config));
  auto none = AugmentDocument(doc, config, nullptr, nullptr);
  ASSERT_TRUE(none.ok());
  EXPECT_FALSE(none->has_value());
}

TEST(TableOneTest, KeyphraseDropoutAllMasked) {
  AugConfig config;
  config.strategy = Strategy::kTaKpd;
  config.kpd_prob = 1.0;
  Document sample = Augment(TableOneDocument(), config, nullptr);
  EXPECT_EQ(SampleText(sample),
            "casesian : a [MASK] using statistical and experiential perspectives "
            "for improving the [MASK] in the [MASK] process [SEP] objectives : "
            "[MASK] is crucial for better patient care in the healthcare industry");
}

TEST(TableOneTest, KeyphraseSynonymReplacement) {
  AugConfig config;
  config.strategy = Strategy::kTaKpsr;
  Lexicon lex = TableOneLexicon();
  Document sample = Augment(TableOneDocument(), config, &lex);
  EXPECT_EQ(SampleText(sample),
            "casesian : a cognition based system using statistical and "
            "experiential perspectives for improving the noesis sharing in the "
            "checkup prescription process [SEP] objectives : noesis sharing is "
            "crucial for better patient care in the healthcare industry");
}

TEST(TableOneTest, SynonymReplacementPinnedSeed) {
  AugConfig config;
  config.strategy = Strategy::kTaSr;
  config.seed = 8;
  Lexicon lex = TableOneLexicon();
  Document sample = Augment(TableOneDocument(), config, &lex);
  // 32 word tokens, so round(0.1 * 32) = 3 replacements.
  EXPECT_EQ(SampleText(sample),
            "casesian : a knowledge-based system using statistical and "
            "experiential perspectives for better the knowledge sharing in the "
            "checkup prescription process [SEP] objectives : knowledge sharing "
            "is crucial for advantageously patient care in the healthcare "
            "industry");
}

TEST(TableOneTest, BackTranslationWithMockTable) {
  auto mock = MockTranslator::Load(DataPath("table1_mock_translation.tsv"));
  ASSERT_TRUE(mock.ok());
  AugConfig config;
  config.strategy = Strategy::kTaBt;
  Document sample = Augment(TableOneDocument(), config, nullptr, &*mock);
  EXPECT_EQ(SampleText(sample),
            "cassian : a knowledge-based system that uses statistical and "
            "experiential perspectives to improve the sharing of knowledge in "
            "the medical prescription process [SEP] objectives : knowledge "
            "sharing is essential to improve patient care in the health sector");
}

TEST(TableOneTest, BodySample) {
  AugConfig config;
  Document sample = Augment(TableOneDocument(), config, nullptr);
  const std::string prefix =
      "numerous methods have been investigated for improving the knowledge "
      "sharing process in medical prescription . [SEP] case-based reasoning is "
      "one of the most prevalent knowledge extraction methods .";
  EXPECT_EQ(SampleText(sample).substr(0, prefix.size()), prefix);
  EXPECT_EQ(sample.keyphrases, TableOneDocument().keyphrases);
}

TEST(KpDropoutTest, ProbabilityZeroAndMaskCount) {
  auto tokens = Tokenize("graph models and graph models beat deep nets [SEP] "
                         "deep nets");
  std::vector<Keyphrase> kps = {{"graph model"}, {"deep nets"}, {"absent"}};
  auto spans = PresentSpans(kps, tokens);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(KpDropout(tokens, spans, 0.0, 1, "d"), tokens);
  auto masked = KpDropout(tokens, spans, 1.0, 1, "d");
  EXPECT_EQ(JoinTokens(masked), "[MASK] and [MASK] beat [MASK] [SEP] [MASK]");
}

TEST(KpDropoutTest, OverlapsResolvedAndEradicated) {
  // "b a" is masked first; "a a" then still occurs and is masked too.
  auto tokens = Tokenize("b a a a");
  std::vector<Keyphrase> kps = {{"a a"}, {"b a"}};
  auto out = KpDropout(tokens, PresentSpans(kps, tokens), 1.0, 1, "d");
  EXPECT_EQ(JoinTokens(out), "[MASK] [MASK]");
}

TEST(KpDropoutTest, SelectionIsPerKeyphrase) {
  auto tokens = Tokenize("alpha beta gamma delta alpha");
  std::vector<Keyphrase> kps = {{"alpha"}, {"beta"}, {"gamma"}, {"delta"}};
  auto spans = PresentSpans(kps, tokens);
  // Each keyphrase's draw does not depend on the others being present.
  for (uint64_t seed = 0; seed < 50; ++seed) {
    auto all = KpDropout(tokens, spans, 0.5, seed, "d");
    SpansByKeyphrase only_alpha = {spans[0]};
    auto alpha = KpDropout(tokens, only_alpha, 0.5, seed, "d");
    EXPECT_EQ(all[0].surface == "[MASK]", alpha[0].surface == "[MASK]");
    EXPECT_EQ(all[0].surface, all.back().surface);
  }
}

TEST(KpSynonymReplaceTest, EmptyLexiconAndRematch) {
  auto tokens = Tokenize("graph models and more graph models");
  std::vector<Keyphrase> kps = {{"graph models"}};
  auto spans = PresentSpans(kps, tokens);
  EXPECT_EQ(KpSynonymReplace(tokens, spans, Lexicon()), tokens);

  auto lex = Lexicon::Parse("graph\tchart\n");
  auto out = KpSynonymReplace(tokens, spans, *lex);
  EXPECT_EQ(JoinTokens(out), "chart models and more chart models");
  EXPECT_TRUE(FindOccurrences(kps[0], out).empty());
}

TEST(KpSynonymReplaceTest, MultiwordSynonymChangesLength) {
  auto tokens = Tokenize("the medical prescription process");
  auto lex = Lexicon::Parse("medical_prescription\tdrug_order_form\n");
  std::vector<Keyphrase> kps = {{"medical prescription"}};
  auto out = KpSynonymReplace(tokens, PresentSpans(kps, tokens), *lex);
  EXPECT_EQ(JoinTokens(out), "the drug order form process");
}

TEST(SynonymReplaceRandomTest, BudgetAndRatioZero) {
  std::string text;
  std::string tsv;
  for (int i = 0; i < 100; ++i) {
    text += "w" + std::string(1, static_cast<char>('a' + i % 26)) +
            std::string(1, static_cast<char>('a' + i / 26)) + " ";
  }
  auto tokens = Tokenize(text);
  for (int i = 0; i < 30; ++i) tsv += tokens[static_cast<size_t>(i) * 3].surface + "\tsyn\n";
  auto lex = Lexicon::Parse(tsv);
  ASSERT_TRUE(lex.ok());
  auto r = SynonymReplaceRandom(tokens, 0.1, *lex, 5, "d");
  EXPECT_EQ(r.positions.size(), 10u);
  size_t changed = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (r.tokens[i] != tokens[i]) {
      ++changed;
      EXPECT_EQ(i % 3, 0u);
      EXPECT_LT(i, 90u);
    }
  }
  EXPECT_EQ(changed, 10u);
  EXPECT_EQ(SynonymReplaceRandom(tokens, 0.0, *lex, 5, "d").tokens, tokens);
}

TEST(SynonymReplaceRandomTest, MarkersNeverCandidates) {
  auto tokens = Tokenize("[SEP] <digit> [MASK] , word");
  auto lex = Lexicon::Parse("[sep]\tx\n<digit>\tx\n[mask]\tx\n,\tx\n");
  auto r = SynonymReplaceRandom(tokens, 1.0, *lex, 1, "d");
  EXPECT_EQ(r.tokens, tokens);
}

class FailingTranslator : public Translator {
 public:
  absl::StatusOr<std::vector<std::string>> TranslateBatch(
      const TranslateRequest& request) override {
    if (++calls_ > 2) return absl::UnavailableError("down");
    return request.texts;
  }
  std::string Describe() const override { return "failing"; }

 private:
  int calls_ = 0;
};

TEST(BackTranslateTest, AlignmentAndBatchErrors) {
  MockTranslator identity;
  AugConfig config;
  std::vector<Sentence> three = {Sentence{Tokenize("a b .")},
                                 Sentence{Tokenize("c")},
                                 Sentence{Tokenize("d e")}};
  auto out = BackTranslate(three, identity, config);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(*out, three);

  config.bt_batch_size = 2;
  FailingTranslator failing;
  out = BackTranslate(three, failing, config);
  ASSERT_FALSE(out.ok());
  EXPECT_NE(std::string(out.status().message()).find("batch 1 of 2"),
            std::string::npos)
      << out.status();
}

TEST(BackTranslateTest, EmptyTranslationKeepsSentence) {
  MockTranslator blanking(MockTranslator::Table{{"c", "<br>"}});
  AugConfig config;
  std::vector<Sentence> in = {Sentence{Tokenize("c")}, Sentence{Tokenize("c d")}};
  auto out = BackTranslate(in, blanking, config);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(JoinSentence((*out)[0]), "c");
  EXPECT_EQ(JoinSentence((*out)[1]), "d");
}

TEST(AugmentCorpusTest, DoublingOrderAndDeterminism) {
  Corpus corpus = ToyCorpus();
  auto lex = Lexicon::Load(DataPath("toy_lexicon.tsv"));
  ASSERT_TRUE(lex.ok());
  auto mock = MockTranslator::Load(DataPath("table1_mock_translation.tsv"));
  ASSERT_TRUE(mock.ok());
  for (Strategy s : AllStrategies()) {
    AugConfig config;
    config.strategy = s;
    config.seed = 3;
    auto a = AugmentCorpus(corpus, config, &*lex, &*mock);
    auto b = AugmentCorpus(corpus, config, &*lex, &*mock);
    ASSERT_TRUE(a.ok() && b.ok()) << StrategyName(s);
    ASSERT_EQ(a->size(), 2 * corpus.size());
    EXPECT_EQ(a->documents, b->documents);
    std::set<std::string> ids;
    for (size_t i = 0; i < corpus.size(); ++i) {
      EXPECT_EQ(a->documents[i], corpus.documents[i]);
      const Document& sample = a->documents[corpus.size() + i];
      EXPECT_EQ(SourceId(sample), corpus.documents[i].id);
      EXPECT_EQ(sample.keyphrases, corpus.documents[i].keyphrases);
      EXPECT_EQ(sample.provenance, StrategyProvenance(s));
    }
    for (const Document& d : a->documents) ids.insert(d.id);
    EXPECT_EQ(ids.size(), a->size());
  }
}

TEST(AugmentCorpusTest, EligibilityAndErrors) {
  Corpus corpus = ToyCorpus();
  for (int i : {2, 5, 11}) corpus.documents[static_cast<size_t>(i)].body.clear();
  AugConfig config;
  auto out = AugmentCorpus(corpus, config, nullptr, nullptr);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out->size(), 2 * corpus.size() - 3);

  config.strategy = Strategy::kTaKpsr;
  EXPECT_FALSE(AugmentCorpus(corpus, config, nullptr, nullptr).ok());
  config.strategy = Strategy::kBodyBt;
  EXPECT_FALSE(AugmentCorpus(corpus, config, nullptr, nullptr).ok());
  config.strategy = Strategy::kBody;
  EXPECT_FALSE(AugmentCorpus(*out, config, nullptr, nullptr).ok());
}

}  // namespace
}  // namespace kpaug
