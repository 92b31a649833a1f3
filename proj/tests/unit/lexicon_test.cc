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
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "kpaug/lexicon/lexicon.h"
#include "kpaug/textnorm/tokenizer.h"

namespace kpaug {
namespace {

std::string Replace(const Lexicon& lex, const std::string& phrase) {
  auto out = SynonymFor(lex, Tokenize(phrase));
  return out ? JoinTokens(*out) : "<none>";
}

Lexicon TableOneLexicon() {
  auto lex = Lexicon::Load(std::string(KPAUG_DATA_DIR) + "/table1_lexicon.tsv");
  EXPECT_TRUE(lex.ok()) << lex.status();
  return *lex;
}

TEST(LexiconTest, Parse) {
  auto lex = Lexicon::Parse("knowledge\tcognition,noesis\n");
  ASSERT_TRUE(lex.ok());
  ASSERT_NE(lex->Find("knowledge"), nullptr);
  EXPECT_EQ(*lex->Find("knowledge"),
            (std::vector<std::string>{"cognition", "noesis"}));

  lex = Lexicon::Parse("");
  ASSERT_TRUE(lex.ok());
  EXPECT_TRUE(lex->empty());

  lex = Lexicon::Parse("a\tb\nno tab here\n", "syn.tsv");
  ASSERT_FALSE(lex.ok());
  EXPECT_NE(std::string(lex.status().message()).find("syn.tsv:2:"),
            std::string::npos);
  EXPECT_FALSE(Lexicon::Parse("a\tb\na\tc\n").ok());
  EXPECT_FALSE(Lexicon::Parse("a\tb,,c\n").ok());
}

TEST(LexiconTest, OrderLowercaseAndDuplicates) {
  auto lex = Lexicon::Parse("Zeta\tB,a,b,a\r\nalpha\tx\n");
  ASSERT_TRUE(lex.ok());
  ASSERT_EQ(lex->size(), 2u);
  EXPECT_EQ(lex->entries()[0].lemma, "zeta");
  EXPECT_EQ(lex->entries()[0].synonyms, (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(lex->entries()[1].lemma, "alpha");
}

TEST(SynonymForTest, TableOneKeyphrases) {
  Lexicon lex = TableOneLexicon();
  EXPECT_EQ(Replace(lex, "knowledge sharing"), "noesis sharing");
  EXPECT_EQ(Replace(lex, "medical prescription"), "checkup prescription");
  EXPECT_EQ(Replace(lex, "knowledge-based system"), "cognition based system");
  EXPECT_EQ(Replace(lex, "bayesian theorem"), "<none>");
}

TEST(SynonymForTest, WholePhraseFirstAndSelfSkipped) {
  auto lex = Lexicon::Parse(
      "deep_learning\tdeep_learning,representation_learning\n"
      "deep\tdeep,thick\n"
      "net\tnet\n");
  ASSERT_TRUE(lex.ok());
  EXPECT_EQ(Replace(*lex, "deep learning"), "representation learning");
  EXPECT_EQ(Replace(*lex, "deep net"), "thick net");
  EXPECT_EQ(Replace(*lex, "net"), "<none>");
  EXPECT_EQ(Replace(*lex, "medical_examination"), "<none>");
}

TEST(SynonymForTest, NeverReturnsInputAndKeepsLengthPerToken) {
  std::mt19937_64 gen(3);
  const std::vector<std::string> words = {"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string tsv;
    for (const std::string& w : words) {
      if (gen() % 2) continue;
      tsv += w + "\t";
      int n = 1 + static_cast<int>(gen() % 3);
      for (int i = 0; i < n; ++i) {
        tsv += (i ? "," : "") + words[gen() % words.size()];
      }
      tsv += "\n";
    }
    auto lex = Lexicon::Parse(tsv);
    ASSERT_TRUE(lex.ok()) << tsv;
    std::string phrase;
    for (int i = 0, n = 1 + static_cast<int>(gen() % 3); i < n; ++i) {
      phrase += (i ? " " : "") + words[gen() % words.size()];
    }
    auto input = Tokenize(phrase);
    auto out = SynonymFor(*lex, input);
    if (!out) continue;
    EXPECT_NE(JoinTokens(*out), phrase);
    EXPECT_EQ(out->size(), input.size()) << tsv << phrase;
    auto again = SynonymFor(*lex, input);
    EXPECT_EQ(*again, *out);
  }
}

}  // namespace
}  // namespace kpaug
