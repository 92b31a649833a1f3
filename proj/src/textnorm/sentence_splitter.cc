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

#include "kpaug/textnorm/sentence_splitter.h"

#include <fstream>
#include <utility>

#include "absl/status/status.h"
#include "kpaug/textnorm/tokenizer.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

bool IsTerminal(const Token& token) {
  return token.surface == "." || token.surface == "!" || token.surface == "?";
}

}  // namespace

const std::vector<std::string>& SentenceSplitter::DefaultAbbreviations() {
  // Mirrors data/abbreviations.txt.
  static const auto* const kList = new std::vector<std::string>{
      "al",   "approx", "apr",  "assn", "aug", "ave",  "ca",  "cf",   "ch",
      "co",   "col",    "corp", "dec",  "dept", "dr",  "e.g", "ed",   "eds",
      "eq",   "eqs",    "esp",  "est",  "et",  "etc",  "feb", "fig",  "figs",
      "gen",  "gov",    "i.e",  "inc",  "jan", "jr",   "jul", "jun",  "lt",
      "ltd",  "mar",    "max",  "min",  "mr",  "mrs",  "ms",  "mt",   "no",
      "nos",  "nov",    "oct",  "op",   "p",   "pp",   "prof", "ref", "refs",
      "rep",  "resp",   "rev",  "sec",  "secs", "sep", "sept", "sr",  "st",
      "tab",  "univ",   "viz",  "vol",  "vols", "vs",  "w.r.t"};
  return *kList;
}

SentenceSplitter::SentenceSplitter()
    : abbreviations_(DefaultAbbreviations().begin(),
                     DefaultAbbreviations().end()) {}

SentenceSplitter::SentenceSplitter(std::set<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

absl::StatusOr<SentenceSplitter> SentenceSplitter::FromFile(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(
        StrCat("cannot open abbreviation list ", path));
  }
  std::set<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string entry(StripWhitespace(line));
    if (entry.empty() || entry[0] == '#') continue;
    entry = AsciiLower(entry);
    if (entry.back() == '.') entry.pop_back();
    if (!entry.empty()) entries.insert(std::move(entry));
  }
  return SentenceSplitter(std::move(entries));
}

std::vector<Sentence> SentenceSplitter::Split(
    std::string_view text, const SpecialTokens& special) const {
  return SplitTokens(Tokenize(text, special));
}

std::vector<Sentence> SentenceSplitter::SplitTokens(
    std::vector<Token> tokens) const {
  std::vector<Sentence> sentences;
  Sentence current;
  for (size_t i = 0; i < tokens.size();) {
    if (!IsTerminal(tokens[i])) {
      current.tokens.push_back(std::move(tokens[i++]));
      continue;
    }
    size_t run_end = i;
    while (run_end < tokens.size() && IsTerminal(tokens[run_end])) ++run_end;
    const bool single_period = run_end - i == 1 && tokens[i].surface == ".";
    const bool after_abbreviation =
        single_period && !current.tokens.empty() &&
        current.tokens.back().kind == TokenKind::kWord &&
        IsAbbreviation(current.tokens.back().surface);
    for (; i < run_end; ++i) current.tokens.push_back(std::move(tokens[i]));
    if (!after_abbreviation) {
      sentences.push_back(std::move(current));
      current = Sentence();
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

}  // namespace kpaug
