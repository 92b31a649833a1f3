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

#include "kpaug/lexicon/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kpaug/textnorm/normalizer.h"
#include "kpaug/textnorm/tokenizer.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

std::string Underscored(std::span<const Token> phrase) {
  std::string out;
  for (const Token& t : phrase) {
    if (!out.empty()) out += '_';
    out += t.surface;
  }
  return out;
}

// Synonym lemma as tokens: underscores become spaces, then the usual
// normalization.
std::vector<Token> LemmaTokens(std::string_view lemma,
                               const SpecialTokens& special) {
  std::string spaced(lemma);
  std::replace(spaced.begin(), spaced.end(), '_', ' ');
  return Tokenize(Normalize(spaced, special), special);
}

bool SameSurfaces(std::span<const Token> a, std::span<const Token> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const Token& x, const Token& y) {
                      return x.surface == y.surface;
                    });
}

// Differing synonyms of `key`, where `input` is the phrase being replaced.
std::vector<std::vector<Token>> Differing(const Lexicon& lexicon,
                                          std::string_view key,
                                          std::span<const Token> input,
                                          const SpecialTokens& special) {
  std::vector<std::vector<Token>> out;
  const std::vector<std::string>* synonyms = lexicon.Find(key);
  if (synonyms == nullptr) return out;
  for (const std::string& syn : *synonyms) {
    if (syn == key) continue;
    std::vector<Token> tokens = LemmaTokens(syn, special);
    if (tokens.empty() || SameSurfaces(tokens, input)) continue;
    out.push_back(std::move(tokens));
  }
  return out;
}

}  // namespace

absl::Status Lexicon::Add(std::string lemma, std::vector<std::string> synonyms) {
  if (index_.count(lemma) > 0) {
    return absl::AlreadyExistsError(StrCat("duplicate lemma '", lemma, "'"));
  }
  std::vector<std::string> unique;
  for (std::string& s : synonyms) {
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) {
      unique.push_back(std::move(s));
    }
  }
  index_.emplace(lemma, entries_.size());
  entries_.push_back({std::move(lemma), std::move(unique)});
  return absl::OkStatus();
}

const std::vector<std::string>* Lexicon::Find(std::string_view lemma) const {
  auto it = index_.find(lemma);
  return it == index_.end() ? nullptr : &entries_[it->second].synonyms;
}

absl::StatusOr<Lexicon> Lexicon::Parse(std::string_view text,
                                       std::string_view source) {
  Lexicon lexicon;
  int line_no = 0;
  for (std::string_view line : SplitString(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (StripWhitespace(line).empty()) continue;
    auto fail = [&](std::string_view why) {
      return absl::InvalidArgumentError(
          StrCat(source, ":", line_no, ": ", why));
    };
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) return fail("expected lemma<TAB>synonyms");
    std::string lemma = AsciiLower(StripWhitespace(line.substr(0, tab)));
    if (lemma.empty()) return fail("empty lemma");
    std::vector<std::string> synonyms;
    for (std::string_view s : SplitString(line.substr(tab + 1), ',')) {
      s = StripWhitespace(s);
      if (s.empty()) return fail("empty synonym");
      if (s.find_first_of(" \t") != std::string_view::npos) {
        return fail(StrCat("synonym '", s, "' contains whitespace"));
      }
      synonyms.push_back(AsciiLower(s));
    }
    absl::Status added = lexicon.Add(std::move(lemma), std::move(synonyms));
    if (!added.ok()) return fail(std::string(added.message()));
  }
  return lexicon;
}

absl::StatusOr<Lexicon> Lexicon::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path);
}

std::vector<std::vector<Token>> TokenSynonyms(const Lexicon& lexicon,
                                              const Token& token,
                                              const SpecialTokens& special) {
  if (token.kind != TokenKind::kWord) return {};
  std::span<const Token> input(&token, 1);
  if (lexicon.Find(token.surface) != nullptr) {
    return Differing(lexicon, token.surface, input, special);
  }
  if (token.surface.find('-') != std::string::npos) {
    std::string key = token.surface;
    std::replace(key.begin(), key.end(), '-', '_');
    return Differing(lexicon, key, input, special);
  }
  return {};
}

std::optional<std::vector<Token>> SynonymFor(const Lexicon& lexicon,
                                             std::span<const Token> phrase,
                                             const SpecialTokens& special) {
  if (phrase.empty()) return std::nullopt;
  if (phrase.size() > 1) {
    auto whole = Differing(lexicon, Underscored(phrase), phrase, special);
    if (!whole.empty()) return whole.front();
  }
  std::vector<Token> out;
  bool changed = false;
  for (const Token& t : phrase) {
    auto synonyms = TokenSynonyms(lexicon, t, special);
    if (synonyms.empty()) {
      out.push_back(t);
    } else {
      out.insert(out.end(), synonyms.front().begin(), synonyms.front().end());
      changed = true;
    }
  }
  if (!changed) return std::nullopt;
  return out;
}

}  // namespace kpaug
