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

#include "kpaug/augment/augment.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "kpaug/corpus/flatten.h"
#include "kpaug/textnorm/normalizer.h"
#include "kpaug/textnorm/porter_stemmer.h"
#include "kpaug/textnorm/sentence_splitter.h"
#include "kpaug/textnorm/tokenizer.h"
#include "kpaug/util/random.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

struct StrategyInfo {
  Strategy strategy;
  std::string_view name;
  Provenance provenance;
  Transform transform;
  bool body;
};

constexpr std::array<StrategyInfo, 9> kStrategies = {{
    {Strategy::kBody, "body", Provenance::kAugBody, Transform::kNone, true},
    {Strategy::kTaSr, "ta_sr", Provenance::kAugTaSr, Transform::kSr, false},
    {Strategy::kTaBt, "ta_bt", Provenance::kAugTaBt, Transform::kBt, false},
    {Strategy::kTaKpd, "ta_kpd", Provenance::kAugTaKpd, Transform::kKpd, false},
    {Strategy::kTaKpsr, "ta_kpsr", Provenance::kAugTaKpsr, Transform::kKpsr, false},
    {Strategy::kBodySr, "body_sr", Provenance::kAugBodySr, Transform::kSr, true},
    {Strategy::kBodyBt, "body_bt", Provenance::kAugBodyBt, Transform::kBt, true},
    {Strategy::kBodyKpd, "body_kpd", Provenance::kAugBodyKpd, Transform::kKpd, true},
    {Strategy::kBodyKpsr, "body_kpsr", Provenance::kAugBodyKpsr, Transform::kKpsr,
     true},
}};

const StrategyInfo& Info(Strategy strategy) {
  for (const StrategyInfo& info : kStrategies) {
    if (info.strategy == strategy) return info;
  }
  return kStrategies[0];
}

// Keeps spans in order of start (longer first on ties), dropping any that
// overlap a span already kept.
template <typename T>
std::vector<std::pair<TokenSpan, T>> ResolveOverlaps(
    std::vector<std::pair<TokenSpan, T>> spans) {
  std::stable_sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
    if (a.first.start != b.first.start) return a.first.start < b.first.start;
    return a.first.size() > b.first.size();
  });
  std::vector<std::pair<TokenSpan, T>> kept;
  size_t covered = 0;
  for (auto& s : spans) {
    if (!kept.empty() && s.first.start < covered) continue;
    covered = s.first.end;
    kept.push_back(std::move(s));
  }
  return kept;
}

std::vector<Sentence> SplitAtDelimiter(std::span<const Token> tokens,
                                       const SpecialTokens& special) {
  std::vector<Sentence> out;
  Sentence current;
  for (const Token& t : tokens) {
    if (t.surface == special.delimiter) {
      if (!current.empty()) out.push_back(std::move(current));
      current = Sentence();
    } else {
      current.tokens.push_back(t);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

// Rebuilds a sample document from its transformed token stream.
Document SampleFromTokens(const Document& source, Strategy strategy,
                          std::span<const Token> tokens,
                          const SpecialTokens& special) {
  Document sample;
  sample.id = StrCat(source.id, "#", ProvenanceName(StrategyProvenance(strategy)));
  sample.keyphrases = source.keyphrases;
  sample.provenance = StrategyProvenance(strategy);
  if (TargetsBody(strategy)) {
    sample.body = SplitAtDelimiter(tokens, special);
    return sample;
  }
  auto delim = std::find_if(tokens.begin(), tokens.end(), [&](const Token& t) {
    return t.surface == special.delimiter;
  });
  sample.title.tokens.assign(tokens.begin(), delim);
  if (delim != tokens.end()) {
    std::vector<Token> rest;
    for (auto it = delim + 1; it != tokens.end(); ++it) {
      if (it->surface != special.delimiter) rest.push_back(*it);
    }
    static const SentenceSplitter* splitter = new SentenceSplitter();
    sample.abstract = splitter->SplitTokens(std::move(rest));
  }
  return sample;
}

// Sentences that a BT strategy translates: title then abstract sentences,
// or the capped body.
std::vector<Sentence> BtSentences(const Document& doc, Strategy strategy,
                                  const AugConfig& config) {
  if (TargetsBody(strategy)) return CapBody(doc.body, config.max_body_words);
  std::vector<Sentence> out;
  if (!doc.title.empty()) out.push_back(doc.title);
  out.insert(out.end(), doc.abstract.begin(), doc.abstract.end());
  return out;
}

Document SampleFromSentences(const Document& source, Strategy strategy,
                             std::vector<Sentence> sentences) {
  Document sample;
  sample.id = StrCat(source.id, "#", ProvenanceName(StrategyProvenance(strategy)));
  sample.keyphrases = source.keyphrases;
  sample.provenance = StrategyProvenance(strategy);
  if (TargetsBody(strategy)) {
    sample.body = std::move(sentences);
  } else if (!sentences.empty()) {
    sample.title = std::move(sentences.front());
    sample.abstract.assign(std::make_move_iterator(sentences.begin() + 1),
                           std::make_move_iterator(sentences.end()));
  }
  return sample;
}

std::vector<Sentence> RetokenizeTranslations(
    const std::vector<Sentence>& originals,
    std::span<const std::string> translations, const SpecialTokens& special) {
  std::vector<Sentence> out;
  out.reserve(originals.size());
  for (size_t i = 0; i < originals.size(); ++i) {
    Sentence s{Tokenize(Normalize(translations[i], special), special)};
    out.push_back(s.empty() ? originals[i] : std::move(s));
  }
  return out;
}

}  // namespace

std::string_view StrategyName(Strategy strategy) { return Info(strategy).name; }

absl::StatusOr<Strategy> ParseStrategy(std::string_view name) {
  for (const StrategyInfo& info : kStrategies) {
    if (info.name == name) return info.strategy;
  }
  return absl::InvalidArgumentError(StrCat("unknown strategy '", name, "'"));
}

const std::vector<Strategy>& AllStrategies() {
  static const auto* all = [] {
    auto* v = new std::vector<Strategy>();
    for (const StrategyInfo& info : kStrategies) v->push_back(info.strategy);
    return v;
  }();
  return *all;
}

Provenance StrategyProvenance(Strategy strategy) {
  return Info(strategy).provenance;
}

Transform StrategyTransform(Strategy strategy) {
  return Info(strategy).transform;
}

bool TargetsBody(Strategy strategy) { return Info(strategy).body; }

absl::Status AugConfig::Validate() const {
  if (!(kpd_prob >= 0 && kpd_prob <= 1)) {
    return absl::InvalidArgumentError(
        StrCat("kpd_prob must be in [0, 1], got ", kpd_prob));
  }
  if (!(sr_ratio >= 0 && sr_ratio <= 1)) {
    return absl::InvalidArgumentError(
        StrCat("sr_ratio must be in [0, 1], got ", sr_ratio));
  }
  if (!(temperature >= 0)) {
    return absl::InvalidArgumentError("temperature must be >= 0");
  }
  if (bt_batch_size == 0) {
    return absl::InvalidArgumentError("bt_batch_size must be positive");
  }
  if (source_language == pivot_language) {
    return absl::InvalidArgumentError("pivot language equals source language");
  }
  const std::array<const std::string*, 3> markers = {
      &special.delimiter, &special.mask, &special.digit};
  for (const std::string* m : markers) {
    if (m->empty() || m->find_first_of(" \t\n") != std::string::npos) {
      return absl::InvalidArgumentError(
          StrCat("special token '", *m, "' must be non-empty without spaces"));
    }
  }
  if (special.delimiter == special.mask || special.delimiter == special.digit ||
      special.mask == special.digit) {
    return absl::InvalidArgumentError("special tokens must be distinct");
  }
  return absl::OkStatus();
}

Json AugConfig::ToJson() const {
  return Json{{"strategy", StrategyName(strategy)},
              {"kpd_prob", kpd_prob},
              {"sr_ratio", sr_ratio},
              {"sr_random_synonym", sr_random_synonym},
              {"delimiter", special.delimiter},
              {"mask_token", special.mask},
              {"digit_token", special.digit},
              {"max_body_words", max_body_words},
              {"source_language", source_language},
              {"pivot_language", pivot_language},
              {"temperature", temperature},
              {"bt_batch_size", bt_batch_size},
              {"seed", seed}};
}

absl::Status AugConfig::ApplyJson(const Json& overrides) {
  if (!overrides.is_object()) {
    return absl::InvalidArgumentError("config must be a JSON object");
  }
  // Applied to a copy so a rejected override leaves *this untouched.
  AugConfig next = *this;
  if (absl::Status s = next.ApplyJsonUnchecked(overrides); !s.ok()) return s;
  if (absl::Status s = next.Validate(); !s.ok()) return s;
  *this = std::move(next);
  return absl::OkStatus();
}

absl::Status AugConfig::ApplyJsonUnchecked(const Json& overrides) {
  try {
    for (const auto& [key, value] : overrides.items()) {
      if (key == "strategy") {
        auto s = ParseStrategy(value.get<std::string>());
        if (!s.ok()) return s.status();
        strategy = *s;
      } else if (key == "kpd_prob") {
        kpd_prob = value.get<double>();
      } else if (key == "sr_ratio") {
        sr_ratio = value.get<double>();
      } else if (key == "sr_random_synonym") {
        sr_random_synonym = value.get<bool>();
      } else if (key == "delimiter") {
        special.delimiter = value.get<std::string>();
      } else if (key == "mask_token") {
        special.mask = value.get<std::string>();
      } else if (key == "digit_token") {
        special.digit = value.get<std::string>();
      } else if (key == "max_body_words") {
        max_body_words = value.get<size_t>();
      } else if (key == "source_language") {
        source_language = value.get<std::string>();
      } else if (key == "pivot_language") {
        pivot_language = value.get<std::string>();
      } else if (key == "temperature") {
        temperature = value.get<double>();
      } else if (key == "bt_batch_size") {
        bt_batch_size = value.get<size_t>();
      } else if (key == "seed") {
        seed = value.get<uint64_t>();
      } else {
        return absl::InvalidArgumentError(StrCat("unknown config key '", key, "'"));
      }
    }
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(StrCat("bad config value: ", e.what()));
  }
  return absl::OkStatus();
}

std::optional<std::vector<Token>> SelectTarget(const Document& doc,
                                               Strategy strategy,
                                               const AugConfig& config) {
  FlattenOptions options;
  options.special = config.special;
  options.max_body_words = config.max_body_words;
  if (TargetsBody(strategy)) {
    if (doc.body.empty()) return std::nullopt;
    return FlattenTokens(doc, PartSet::Body(), options);
  }
  return FlattenTokens(doc, PartSet::TitleAbstract(), options);
}

SpansByKeyphrase PresentSpans(std::span<const Keyphrase> keyphrases,
                              std::span<const Token> tokens,
                              const SpecialTokens& special) {
  SpansByKeyphrase out;
  Matcher matcher(tokens, special);
  for (const Keyphrase& kp : keyphrases) {
    auto spans = matcher.Find(kp);
    if (!spans.empty()) out.emplace_back(kp, std::move(spans));
  }
  return out;
}

std::vector<Token> KpDropout(std::span<const Token> tokens,
                             const SpansByKeyphrase& spans, double p,
                             uint64_t seed, std::string_view doc_id,
                             const SpecialTokens& special) {
  std::vector<const Keyphrase*> selected;
  std::vector<std::pair<TokenSpan, int>> pending;
  for (const auto& [kp, kp_spans] : spans) {
    Rng rng(DeriveSeed(seed, {"kpd", doc_id, kp.surface}));
    if (!rng.Bernoulli(p)) continue;
    selected.push_back(&kp);
    for (const TokenSpan& s : kp_spans) pending.emplace_back(s, 0);
  }
  const Token mask = MakeToken(special.mask, special);
  std::vector<Token> out(tokens.begin(), tokens.end());
  while (!pending.empty()) {
    auto chosen = ResolveOverlaps(std::move(pending));
    std::vector<Token> next;
    size_t pos = 0;
    for (const auto& [span, unused] : chosen) {
      next.insert(next.end(), out.begin() + pos, out.begin() + span.start);
      next.push_back(mask);
      pos = span.end;
    }
    next.insert(next.end(), out.begin() + pos, out.end());
    out = std::move(next);
    // Overlap resolution can leave an occurrence unmasked; match again.
    pending.clear();
    Matcher matcher(out, special);
    for (const Keyphrase* kp : selected) {
      for (const TokenSpan& s : matcher.Find(*kp)) pending.emplace_back(s, 0);
    }
  }
  return out;
}

std::vector<Token> KpSynonymReplace(std::span<const Token> tokens,
                                    const SpansByKeyphrase& spans,
                                    const Lexicon& lexicon,
                                    const SpecialTokens& special) {
  struct Replacement {
    const Keyphrase* kp;
    std::vector<Token> synonym;
    bool repeat;  // synonym stems differ, so re-matching terminates
  };
  std::vector<Replacement> replacements;
  std::vector<std::pair<TokenSpan, size_t>> pending;
  for (const auto& [kp, kp_spans] : spans) {
    std::vector<Token> kp_tokens = kp.Tokens(special);
    auto synonym = SynonymFor(lexicon, kp_tokens, special);
    if (!synonym) continue;
    const bool repeat = StemTokens(*synonym) != StemTokens(kp_tokens);
    for (const TokenSpan& s : kp_spans) {
      pending.emplace_back(s, replacements.size());
    }
    replacements.push_back({&kp, std::move(*synonym), repeat});
  }

  std::vector<Token> out(tokens.begin(), tokens.end());
  for (size_t pass = 0; !pending.empty() && pass <= replacements.size(); ++pass) {
    auto chosen = ResolveOverlaps(std::move(pending));
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
      const auto& [span, index] = *it;
      const std::vector<Token>& synonym = replacements[index].synonym;
      out.erase(out.begin() + span.start, out.begin() + span.end);
      out.insert(out.begin() + span.start, synonym.begin(), synonym.end());
    }
    pending.clear();
    Matcher matcher(out, special);
    for (size_t i = 0; i < replacements.size(); ++i) {
      if (!replacements[i].repeat) continue;
      for (const TokenSpan& s : matcher.Find(*replacements[i].kp)) {
        pending.emplace_back(s, i);
      }
    }
  }
  return out;
}

std::vector<Token> SingleTokenSynonyms(const Lexicon& lexicon, const Token& token,
                                       const SpecialTokens& special) {
  std::vector<Token> out;
  for (auto& synonym : TokenSynonyms(lexicon, token, special)) {
    if (synonym.size() == 1 && synonym[0].kind == TokenKind::kWord) {
      out.push_back(std::move(synonym[0]));
    }
  }
  return out;
}

SrResult SynonymReplaceRandom(std::span<const Token> tokens, double ratio,
                              const Lexicon& lexicon, uint64_t seed,
                              std::string_view doc_id, bool random_synonym,
                              const SpecialTokens& special) {
  SrResult result;
  result.tokens.assign(tokens.begin(), tokens.end());
  size_t words = 0;
  std::vector<size_t> candidates;
  std::vector<std::vector<Token>> options;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kWord) continue;
    ++words;
    auto synonyms = SingleTokenSynonyms(lexicon, tokens[i], special);
    if (synonyms.empty()) continue;
    candidates.push_back(i);
    options.push_back(std::move(synonyms));
  }
  const size_t budget =
      static_cast<size_t>(std::llround(ratio * static_cast<double>(words)));
  Rng rng(DeriveSeed(seed, {"sr", doc_id}));
  for (size_t c : rng.SampleWithoutReplacement(
           candidates.size(), std::min(budget, candidates.size()))) {
    const auto& synonyms = options[c];
    const size_t pick = random_synonym ? rng.UniformIndex(synonyms.size()) : 0;
    result.tokens[candidates[c]] = synonyms[pick];
    result.positions.push_back(candidates[c]);
  }
  return result;
}

absl::StatusOr<std::vector<std::string>> RoundTripTexts(
    const std::vector<std::string>& texts, Translator& translator,
    const AugConfig& config) {
  std::vector<std::string> out;
  out.reserve(texts.size());
  const size_t batches = (texts.size() + config.bt_batch_size - 1) /
                         config.bt_batch_size;
  for (size_t b = 0; b < batches; ++b) {
    const size_t begin = b * config.bt_batch_size;
    const size_t end = std::min(texts.size(), begin + config.bt_batch_size);
    auto fail = [&](const absl::Status& s, std::string_view leg) {
      return absl::Status(
          s.code(), StrCat("back-translation batch ", b, " of ", batches, " (",
                           leg, "): ", s.message()));
    };
    TranslateRequest request{
        std::vector<std::string>(texts.begin() + begin, texts.begin() + end),
        config.source_language, config.pivot_language, config.temperature};
    auto forward = translator.TranslateBatch(request);
    if (!forward.ok()) return fail(forward.status(), "forward");
    if (forward->size() != request.texts.size()) {
      return fail(absl::DataLossError("misaligned translations"), "forward");
    }
    TranslateRequest back_request{std::move(*forward), config.pivot_language,
                                  config.source_language, config.temperature};
    auto back = translator.TranslateBatch(back_request);
    if (!back.ok()) return fail(back.status(), "backward");
    if (back->size() != back_request.texts.size()) {
      return fail(absl::DataLossError("misaligned translations"), "backward");
    }
    out.insert(out.end(), std::make_move_iterator(back->begin()),
               std::make_move_iterator(back->end()));
  }
  return out;
}

absl::StatusOr<std::vector<Sentence>> BackTranslate(
    const std::vector<Sentence>& sentences, Translator& translator,
    const AugConfig& config) {
  if (sentences.empty()) return std::vector<Sentence>();
  std::vector<std::string> texts;
  for (const Sentence& s : sentences) texts.push_back(JoinSentence(s));
  auto translated = RoundTripTexts(texts, translator, config);
  if (!translated.ok()) return translated.status();
  return RetokenizeTranslations(sentences, *translated, config.special);
}

std::string SourceId(const Document& doc) {
  if (doc.provenance == Provenance::kOriginal) return doc.id;
  const std::string suffix = StrCat("#", ProvenanceName(doc.provenance));
  if (doc.id.size() > suffix.size() &&
      doc.id.compare(doc.id.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return doc.id.substr(0, doc.id.size() - suffix.size());
  }
  return doc.id;
}

absl::StatusOr<std::optional<Document>> AugmentDocument(
    const Document& doc, const AugConfig& config, const Lexicon* lexicon,
    Translator* translator) {
  const Strategy strategy = config.strategy;
  const Transform transform = StrategyTransform(strategy);
  if ((transform == Transform::kSr || transform == Transform::kKpsr) &&
      lexicon == nullptr) {
    return absl::FailedPreconditionError(
        StrCat(StrategyName(strategy), " needs a lexicon"));
  }
  if (transform == Transform::kBt && translator == nullptr) {
    return absl::FailedPreconditionError(
        StrCat(StrategyName(strategy), " needs a translator"));
  }
  if (TargetsBody(strategy) && doc.body.empty()) return std::nullopt;

  if (transform == Transform::kBt) {
    auto sentences = BackTranslate(BtSentences(doc, strategy, config),
                                   *translator, config);
    if (!sentences.ok()) return sentences.status();
    return SampleFromSentences(doc, strategy, std::move(*sentences));
  }

  auto target = SelectTarget(doc, strategy, config);
  if (!target) return std::nullopt;
  std::vector<Token> tokens = std::move(*target);
  const SpecialTokens& special = config.special;
  switch (transform) {
    case Transform::kNone:
    case Transform::kBt:
      break;
    case Transform::kKpd:
      tokens = KpDropout(tokens, PresentSpans(doc.keyphrases, tokens, special),
                         config.kpd_prob, config.seed, doc.id, special);
      break;
    case Transform::kKpsr:
      tokens = KpSynonymReplace(
          tokens, PresentSpans(doc.keyphrases, tokens, special), *lexicon,
          special);
      break;
    case Transform::kSr:
      tokens = SynonymReplaceRandom(tokens, config.sr_ratio, *lexicon,
                                    config.seed, doc.id,
                                    config.sr_random_synonym, special)
                   .tokens;
      break;
  }
  return SampleFromTokens(doc, strategy, tokens, special);
}

absl::StatusOr<Corpus> AugmentCorpus(const Corpus& corpus,
                                     const AugConfig& config,
                                     const Lexicon* lexicon,
                                     Translator* translator) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  for (const Document& doc : corpus.documents) {
    if (doc.provenance != Provenance::kOriginal) {
      return absl::InvalidArgumentError(
          StrCat("document '", doc.id, "' is already augmented (",
                 ProvenanceName(doc.provenance), ")"));
    }
  }
  Corpus out;
  out.config_fingerprint = corpus.config_fingerprint;
  out.documents = corpus.documents;

  const Strategy strategy = config.strategy;
  if (StrategyTransform(strategy) != Transform::kBt) {
    for (const Document& doc : corpus.documents) {
      auto sample = AugmentDocument(doc, config, lexicon, translator);
      if (!sample.ok()) {
        return absl::Status(sample.status().code(),
                            StrCat(doc.id, ": ", sample.status().message()));
      }
      if (*sample) out.documents.push_back(std::move(**sample));
    }
    return out;
  }

  if (translator == nullptr) {
    return absl::FailedPreconditionError(
        StrCat(StrategyName(strategy), " needs a translator"));
  }
  // One round trip over the sentences of every eligible document, then
  // reassembly in document order.
  std::vector<const Document*> eligible;
  std::vector<std::vector<Sentence>> inputs;
  std::vector<std::string> texts;
  for (const Document& doc : corpus.documents) {
    if (TargetsBody(strategy) && doc.body.empty()) continue;
    eligible.push_back(&doc);
    inputs.push_back(BtSentences(doc, strategy, config));
    for (const Sentence& s : inputs.back()) texts.push_back(JoinSentence(s));
  }
  std::vector<std::string> translated;
  if (!texts.empty()) {
    auto result = RoundTripTexts(texts, *translator, config);
    if (!result.ok()) return result.status();
    translated = std::move(*result);
  }
  size_t offset = 0;
  for (size_t i = 0; i < eligible.size(); ++i) {
    std::span<const std::string> slice(translated.data() + offset,
                                       inputs[i].size());
    offset += inputs[i].size();
    out.documents.push_back(SampleFromSentences(
        *eligible[i], strategy,
        RetokenizeTranslations(inputs[i], slice, config.special)));
  }
  return out;
}

}  // namespace kpaug
