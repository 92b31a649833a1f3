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

// kpaug: command-line front end. Every subcommand that writes a file also
// writes <out>.manifest.json describing how it was produced.

#include <pthread.h>
#include <signal.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fmt/format.h"
#include "kpaug/analyze/analyze.h"
#include "kpaug/augment/augment.h"
#include "kpaug/corpus/corpus_io.h"
#include "kpaug/corpus/preprocess.h"
#include "kpaug/corpus/segment_news.h"
#include "kpaug/corpus/subsample.h"
#include "kpaug/fuse/union.h"
#include "kpaug/lexicon/lexicon.h"
#include "kpaug/metrics/metrics.h"
#include "kpaug/translate/http_translator.h"
#include "kpaug/translate/mock_translator.h"
#include "kpaug/util/checksum.h"
#include "kpaug/util/jsonl.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

constexpr char kVersion[] = "0.1.0";

// Keys of the --config file that configure the translator client rather
// than AugConfig.
struct Settings {
  AugConfig aug;
  HttpTranslatorOptions http;
};

absl::StatusOr<Settings> LoadSettings(const std::string& path) {
  Settings settings;
  if (path.empty()) return settings;
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(StrCat(path, ": cannot open"));
  Json config = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (config.is_discarded() || !config.is_object()) {
    return absl::InvalidArgumentError(StrCat(path, ": not a JSON object"));
  }
  try {
    if (config.contains("endpoint")) {
      settings.http.endpoint = config["endpoint"].get<std::string>();
      config.erase("endpoint");
    }
    if (config.contains("timeout_seconds")) {
      settings.http.timeout_seconds = config["timeout_seconds"].get<double>();
      config.erase("timeout_seconds");
    }
    if (config.contains("max_in_flight")) {
      settings.http.max_in_flight = config["max_in_flight"].get<int>();
      config.erase("max_in_flight");
    }
    if (config.contains("max_attempts")) {
      settings.http.max_attempts = config["max_attempts"].get<int>();
      config.erase("max_attempts");
    }
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(StrCat(path, ": ", e.what()));
  }
  absl::Status status = settings.aug.ApplyJson(config);
  if (!status.ok()) {
    return absl::InvalidArgumentError(StrCat(path, ": ", status.message()));
  }
  return settings;
}

std::string UtcNow() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Manifest {
 public:
  explicit Manifest(std::string command) : command_(std::move(command)) {}

  void Input(const std::string& role, const std::string& path) {
    inputs_.emplace_back(role, path);
  }
  void Output(const std::string& role, const std::string& path) {
    outputs_.emplace_back(role, path);
  }
  Json& extra() { return extra_; }

  // Written next to the first output.
  absl::Status Write() const {
    Json doc;
    doc["tool"] = "kpaug";
    doc["version"] = kVersion;
    doc["command"] = command_;
    doc["created_at"] = UtcNow();
    for (const auto& [key, list] : {std::pair{"inputs", &inputs_},
                                    std::pair{"outputs", &outputs_}}) {
      Json files = Json::array();
      for (const auto& [role, path] : *list) {
        absl::StatusOr<std::string> sha = Sha256File(path);
        if (!sha.ok()) return sha.status();
        files.push_back({{"role", role}, {"path", path}, {"sha256", *sha}});
      }
      doc[key] = files;
    }
    for (const auto& [k, v] : extra_.items()) doc[k] = v;
    return WriteJsonFile(outputs_.front().second + ".manifest.json", doc);
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::string>> outputs_;
  Json extra_ = Json::object();
};

using Action = std::function<absl::Status()>;

// ---------------------------------------------------------------- preprocess

struct PreprocessArgs {
  std::string in, out, rejects, abbreviations, config;
  size_t min_sentences = 5;
};

absl::Status RunPreprocess(const PreprocessArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  PreprocessOptions options;
  options.special = settings->aug.special;
  options.min_sentences = a.min_sentences;
  if (!a.abbreviations.empty()) {
    absl::StatusOr<SentenceSplitter> splitter = SentenceSplitter::FromFile(a.abbreviations);
    if (!splitter.ok()) return splitter.status();
    options.splitter = *std::move(splitter);
  }
  absl::StatusOr<std::vector<RawRecord>> records = LoadRawRecords(a.in);
  if (!records.ok()) return records.status();
  IngestResult result = Ingest(*records, options);
  if (absl::Status s = SaveCorpus(result.corpus, a.out); !s.ok()) return s;
  Manifest manifest("preprocess");
  manifest.Input("raw", a.in);
  if (!a.abbreviations.empty()) manifest.Input("abbreviations", a.abbreviations);
  manifest.Output("corpus", a.out);
  if (!a.rejects.empty()) {
    if (absl::Status s = SaveRejections(result.rejections, a.rejects); !s.ok()) return s;
    manifest.Output("rejects", a.rejects);
  }
  manifest.extra()["config"] = settings->aug.ToJson();
  manifest.extra()["min_sentences"] = a.min_sentences;
  manifest.extra()["kept"] = result.corpus.size();
  manifest.extra()["rejected"] = result.rejections.size();
  std::cerr << fmt::format("preprocess: kept {}, rejected {}\n",
                           result.corpus.size(), result.rejections.size());
  return manifest.Write();
}

// -------------------------------------------------------------- segment-news

struct SegmentArgs {
  std::string in, out, config;
  size_t abstract_words = 300;
};

std::string JoinSentences(const std::vector<Sentence>& sentences) {
  std::vector<std::string> parts;
  for (const Sentence& s : sentences) parts.push_back(JoinSentence(s));
  return JoinStrings(parts, " ");
}

// Input records carry id, headline, text and keyphrases; output records are
// raw article records ready for `preprocess`.
absl::Status RunSegmentNews(const SegmentArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  const SentenceSplitter splitter;
  std::vector<Json> out;
  absl::Status status = ForEachJsonLine(a.in, [&](const Json& rec, int) -> absl::Status {
    if (!rec.contains("headline") || !rec["headline"].is_string() ||
        !rec.contains("text") || !rec["text"].is_string()) {
      return absl::InvalidArgumentError("needs string fields 'headline' and 'text'");
    }
    absl::StatusOr<NewsSegments> seg =
        SegmentNews(rec["headline"].get<std::string>(), rec["text"].get<std::string>(),
                    a.abstract_words, splitter, settings->aug.special);
    if (!seg.ok()) return seg.status();
    Json raw;
    raw["id"] = rec.value("id", Json(""));
    raw["title"] = JoinSentence(seg->title);
    raw["abstract"] = JoinSentences(seg->abstract);
    raw["body"] = JoinSentences(seg->body);
    raw["keyphrases"] = rec.value("keyphrases", Json::array());
    out.push_back(std::move(raw));
    return absl::OkStatus();
  });
  if (!status.ok()) return status;
  if (absl::Status s = WriteJsonLines(a.out, out); !s.ok()) return s;
  Manifest manifest("segment-news");
  manifest.Input("news", a.in);
  manifest.Output("raw", a.out);
  manifest.extra()["abstract_words"] = a.abstract_words;
  return manifest.Write();
}

// -------------------------------------------------------------------- sample

struct SampleArgs {
  std::string in, out, config;
  size_t n = 0;
  uint64_t seed = 0;
};

absl::Status RunSample(const SampleArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  absl::StatusOr<Corpus> corpus = LoadCorpus(a.in, settings->aug.special);
  if (!corpus.ok()) return corpus.status();
  absl::StatusOr<Corpus> sample = Subsample(*corpus, a.n, a.seed);
  if (!sample.ok()) return sample.status();
  if (absl::Status s = SaveCorpus(*sample, a.out); !s.ok()) return s;
  Manifest manifest("sample");
  manifest.Input("corpus", a.in);
  manifest.Output("corpus", a.out);
  manifest.extra()["n"] = a.n;
  manifest.extra()["seeds"] = {{"seed", a.seed}, {"streams", {"subsample"}}};
  return manifest.Write();
}

// ------------------------------------------------------------------- augment

struct AugmentArgs {
  std::string in, out, strategy, lexicon, mock_table, config;
  std::optional<uint64_t> seed;
};

absl::Status RunAugment(const AugmentArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  AugConfig config = settings->aug;
  absl::StatusOr<Strategy> strategy = ParseStrategy(a.strategy);
  if (!strategy.ok()) return strategy.status();
  config.strategy = *strategy;
  if (a.seed) config.seed = *a.seed;

  Manifest manifest("augment");
  manifest.Input("corpus", a.in);
  std::optional<Lexicon> lexicon;
  if (!a.lexicon.empty()) {
    absl::StatusOr<Lexicon> lex = Lexicon::Load(a.lexicon);
    if (!lex.ok()) return lex.status();
    lexicon = *std::move(lex);
    manifest.Input("lexicon", a.lexicon);
    absl::StatusOr<std::string> sha = Sha256File(a.lexicon);
    if (!sha.ok()) return sha.status();
    manifest.extra()["lexicon_sha256"] = *sha;
  }

  std::unique_ptr<Translator> translator;
  if (StrategyTransform(config.strategy) == Transform::kBt) {
    if (!a.mock_table.empty()) {
      absl::StatusOr<MockTranslator> mock = MockTranslator::Load(a.mock_table);
      if (!mock.ok()) return mock.status();
      translator = std::make_unique<MockTranslator>(*std::move(mock));
      manifest.Input("mock_table", a.mock_table);
    } else {
      HttpTranslatorOptions http = settings->http;
      if (http.endpoint.empty()) {
        absl::StatusOr<std::string> endpoint = TranslatorEndpointFromEnvironment();
        if (!endpoint.ok()) return endpoint.status();
        http.endpoint = *endpoint;
      }
      absl::StatusOr<std::unique_ptr<HttpTranslator>> client = HttpTranslator::Create(http);
      if (!client.ok()) return client.status();
      translator = *std::move(client);
    }
    manifest.extra()["translator"] = translator->Describe();
  }

  absl::StatusOr<Corpus> corpus = LoadCorpus(a.in, config.special);
  if (!corpus.ok()) return corpus.status();
  absl::StatusOr<Corpus> out = AugmentCorpus(
      *corpus, config, lexicon ? &*lexicon : nullptr, translator.get());
  if (!out.ok()) return out.status();
  if (absl::Status s = SaveCorpus(*out, a.out); !s.ok()) return s;
  manifest.Output("corpus", a.out);
  manifest.extra()["config"] = config.ToJson();
  manifest.extra()["seeds"] = {{"seed", config.seed}, {"streams", {"kpd", "sr"}}};
  manifest.extra()["samples_added"] = out->size() - corpus->size();
  return manifest.Write();
}

// ------------------------------------------------------------ stats / audit

struct ReportArgs {
  std::string in, out, table, scope, config, lexicon, strategy;
};

absl::Status EmitReport(const ReportArgs& a,
                        const Json& report, const std::string& table,
                        Manifest& manifest) {
  std::cout << table;
  if (absl::Status s = WriteJsonFile(a.out, report); !s.ok()) return s;
  manifest.Output("report", a.out);
  if (!a.table.empty()) {
    if (absl::Status s = WriteTextFile(a.table, table); !s.ok()) return s;
    manifest.Output("table", a.table);
  }
  return manifest.Write();
}

absl::Status RunStats(const ReportArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  absl::StatusOr<PartSet> scope = PartSet::Parse(a.scope);
  if (!scope.ok()) return scope.status();
  absl::StatusOr<Corpus> corpus = LoadCorpus(a.in, settings->aug.special);
  if (!corpus.ok()) return corpus.status();
  absl::StatusOr<StatsReport> report =
      CorpusStats(*corpus, {*scope, settings->aug.special});
  if (!report.ok()) return report.status();
  Manifest manifest("stats");
  manifest.Input("corpus", a.in);
  manifest.extra()["scope"] = scope->ToString();
  return EmitReport(a, report->ToJson(), report->ToTable(), manifest);
}

absl::Status RunAudit(const ReportArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  absl::StatusOr<PartSet> scope = PartSet::Parse(a.scope);
  if (!scope.ok()) return scope.status();
  absl::StatusOr<Corpus> corpus = LoadCorpus(a.in, settings->aug.special);
  if (!corpus.ok()) return corpus.status();
  KPCounts counts = AugmentationAudit(*corpus, {*scope, settings->aug.special});
  Manifest manifest("audit");
  manifest.Input("corpus", a.in);
  manifest.extra()["original_scope"] = scope->ToString();
  return EmitReport(a, counts.ToJson(), counts.ToTable(), manifest);
}

absl::Status RunCoverage(const ReportArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  AugConfig config = settings->aug;
  absl::StatusOr<Strategy> strategy = ParseStrategy(a.strategy);
  if (!strategy.ok()) return strategy.status();
  config.strategy = *strategy;
  absl::StatusOr<Lexicon> lexicon = Lexicon::Load(a.lexicon);
  if (!lexicon.ok()) return lexicon.status();
  absl::StatusOr<Corpus> corpus = LoadCorpus(a.in, config.special);
  if (!corpus.ok()) return corpus.status();
  absl::StatusOr<SynonymCoverage> cov = ComputeSynonymCoverage(*corpus, *lexicon, config);
  if (!cov.ok()) return cov.status();
  Manifest manifest("coverage");
  manifest.Input("corpus", a.in);
  manifest.Input("lexicon", a.lexicon);
  manifest.extra()["strategy"] = a.strategy;
  manifest.extra()["config"] = config.ToJson();
  return EmitReport(a, cov->ToJson(), cov->ToTable(), manifest);
}

// ------------------------------------------------------------------ evaluate

struct EvaluateArgs {
  std::string corpus, preds, report, table, scope = "ta", config;
  bool no_split = false;
};

std::string EvalTable(const EvalReport& r) {
  std::vector<std::vector<std::string>> rows = {
      {"category", "docs", "F1@5", "F1@M", "P@5", "R@5", "P@M", "R@M"}};
  for (const auto& [name, c] : {std::pair{"present", &r.present},
                                std::pair{"absent", &r.absent}}) {
    auto f = [](double v) { return fmt::format("{:.4f}", v); };
    rows.push_back({name, std::to_string(c->n_docs_scored), f(c->macro_f1_at_5),
                    f(c->macro_f1_at_m), f(c->macro_p_at_5), f(c->macro_r_at_5),
                    f(c->macro_p_at_m), f(c->macro_r_at_m)});
  }
  return FormatTable(rows);
}

absl::Status RunEvaluate(const EvaluateArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  absl::StatusOr<PartSet> scope = PartSet::Parse(a.scope);
  if (!scope.ok()) return scope.status();
  absl::StatusOr<Corpus> corpus = LoadCorpus(a.corpus, settings->aug.special);
  if (!corpus.ok()) return corpus.status();
  absl::StatusOr<std::vector<PredictionSet>> preds = LoadPredictions(a.preds);
  if (!preds.ok()) return preds.status();
  EvalOptions options{*scope, settings->aug.special, !a.no_split};
  absl::StatusOr<EvalReport> report = Evaluate(*corpus, *preds, options);
  if (!report.ok()) return report.status();
  Manifest manifest("evaluate");
  manifest.Input("corpus", a.corpus);
  manifest.Input("predictions", a.preds);
  manifest.extra()["scope"] = scope->ToString();
  manifest.extra()["split_predictions"] = !a.no_split;
  ReportArgs out;
  out.out = a.report;
  out.table = a.table;
  return EmitReport(out, report->ToJson(), EvalTable(*report), manifest);
}

// --------------------------------------------------------------------- union

struct UnionArgs {
  std::vector<std::string> preds;
  std::string out, config;
};

absl::Status RunUnion(const UnionArgs& a) {
  absl::StatusOr<Settings> settings = LoadSettings(a.config);
  if (!settings.ok()) return settings.status();
  std::vector<std::vector<PredictionSet>> sets;
  Manifest manifest("union");
  for (const std::string& path : a.preds) {
    absl::StatusOr<std::vector<PredictionSet>> p = LoadPredictions(path);
    if (!p.ok()) return p.status();
    sets.push_back(*std::move(p));
    manifest.Input("predictions", path);
  }
  std::vector<PredictionSet> merged = UnionPredictions(sets, settings->aug.special);
  if (absl::Status s = SavePredictions(merged, a.out); !s.ok()) return s;
  manifest.Output("predictions", a.out);
  manifest.extra()["model_order"] = a.preds;
  return manifest.Write();
}

// ----------------------------------------------------------- mock-translator

struct ServeArgs {
  std::string table, host = "127.0.0.1", port_file;
  int port = 0;
};

absl::Status RunMockTranslator(const ServeArgs& a) {
  MockTranslator mock;
  if (!a.table.empty()) {
    absl::StatusOr<MockTranslator> loaded = MockTranslator::Load(a.table);
    if (!loaded.ok()) return loaded.status();
    mock = *std::move(loaded);
  }
  // Signals are taken synchronously on a helper thread so Stop() never runs
  // inside a handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  TranslatorServer server(mock);
  absl::StatusOr<int> port = server.Bind(a.host, a.port);
  if (!port.ok()) return port.status();
  if (!a.port_file.empty()) {
    if (absl::Status s = WriteTextFile(a.port_file, std::to_string(*port) + "\n"); !s.ok()) {
      return s;
    }
  }
  std::cout << fmt::format("listening on http://{}:{} ({})", a.host, *port,
                           mock.Describe())
            << std::endl;
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.Stop();
  });
  absl::Status status = server.Serve();
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return status;
}

}  // namespace
}  // namespace kpaug

int main(int argc, char** argv) {
  using namespace kpaug;
  CLI::App app{"Keyphrase corpus preprocessing, augmentation and evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Action action;

  PreprocessArgs pre;
  auto* c = app.add_subcommand("preprocess", "Clean, split and filter raw article records");
  c->add_option("--in", pre.in, "Raw records (JSONL)")->required()->check(CLI::ExistingFile);
  c->add_option("--out", pre.out, "Preprocessed corpus (JSONL)")->required();
  c->add_option("--rejects", pre.rejects, "Rejected records sidecar (JSONL)");
  c->add_option("--abbreviations", pre.abbreviations, "Abbreviation list")
      ->check(CLI::ExistingFile);
  c->add_option("--min-sentences", pre.min_sentences, "Minimum full-text sentences");
  c->add_option("--config", pre.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunPreprocess(pre); }; });

  SegmentArgs seg;
  c = app.add_subcommand("segment-news", "Split news articles into title, abstract and body");
  c->add_option("--in", seg.in, "News records with id, headline, text, keyphrases")
      ->required()->check(CLI::ExistingFile);
  c->add_option("--out", seg.out, "Raw article records (JSONL)")->required();
  c->add_option("--abstract-words", seg.abstract_words, "Abstract word cap");
  c->add_option("--config", seg.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunSegmentNews(seg); }; });

  SampleArgs sample;
  c = app.add_subcommand("sample", "Draw a low-resource subsample");
  c->add_option("--in", sample.in)->required()->check(CLI::ExistingFile);
  c->add_option("--out", sample.out)->required();
  c->add_option("--n", sample.n, "Documents to keep")->required();
  c->add_option("--seed", sample.seed)->required();
  c->add_option("--config", sample.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunSample(sample); }; });

  AugmentArgs aug;
  c = app.add_subcommand("augment", "Append one augmented sample per eligible document");
  c->add_option("--in", aug.in)->required()->check(CLI::ExistingFile);
  c->add_option("--out", aug.out)->required();
  c->add_option("--strategy", aug.strategy,
                "body, ta_sr, ta_bt, ta_kpd, ta_kpsr, body_sr, body_bt, body_kpd, body_kpsr")
      ->required();
  c->add_option("--lexicon", aug.lexicon, "Synonym lexicon (TSV)")->check(CLI::ExistingFile);
  c->add_option("--mock-table", aug.mock_table,
                "Translate in-process with this mock table instead of the HTTP endpoint")
      ->check(CLI::ExistingFile);
  c->add_option("--seed", aug.seed);
  c->add_option("--config", aug.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunAugment(aug); }; });

  ReportArgs stats;
  stats.scope = "full";
  c = app.add_subcommand("stats", "Corpus statistics");
  c->add_option("--in", stats.in)->required()->check(CLI::ExistingFile);
  c->add_option("--out", stats.out, "Report (JSON)")->required();
  c->add_option("--table", stats.table, "Also write the plain-text table here");
  c->add_option("--scope", stats.scope, "Presence scope: full, ta, body or a part list");
  c->add_option("--config", stats.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunStats(stats); }; });

  ReportArgs audit;
  audit.scope = "ta";
  c = app.add_subcommand("audit", "Present/absent keyphrase counts over a mixed corpus");
  c->add_option("--in", audit.in)->required()->check(CLI::ExistingFile);
  c->add_option("--out", audit.out, "Report (JSON)")->required();
  c->add_option("--table", audit.table, "Also write the plain-text table here");
  c->add_option("--scope", audit.scope, "Scope used for original documents");
  c->add_option("--config", audit.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunAudit(audit); }; });

  ReportArgs cov;
  c = app.add_subcommand("coverage", "Present keyphrases the lexicon can replace");
  c->add_option("--in", cov.in)->required()->check(CLI::ExistingFile);
  c->add_option("--lexicon", cov.lexicon)->required()->check(CLI::ExistingFile);
  c->add_option("--strategy", cov.strategy, "ta_kpsr or body_kpsr")->required();
  c->add_option("--out", cov.out, "Report (JSON)")->required();
  c->add_option("--table", cov.table, "Also write the plain-text table here");
  c->add_option("--config", cov.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunCoverage(cov); }; });

  EvaluateArgs eval;
  c = app.add_subcommand("evaluate", "Score predictions with F1@5 and F1@M");
  c->add_option("--corpus", eval.corpus)->required()->check(CLI::ExistingFile);
  c->add_option("--preds", eval.preds)->required()->check(CLI::ExistingFile);
  c->add_option("--report", eval.report, "Report (JSON)")->required();
  c->add_option("--table", eval.table, "Also write the plain-text table here");
  c->add_option("--scope", eval.scope, "Scope deciding present vs absent gold");
  c->add_flag("--no-split", eval.no_split,
              "Score every prediction against both categories");
  c->add_option("--config", eval.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunEvaluate(eval); }; });

  UnionArgs uni;
  c = app.add_subcommand("union", "Merge prediction files; earlier files rank first");
  c->add_option("--preds", uni.preds, "Prediction files in model order")
      ->required()->check(CLI::ExistingFile);
  c->add_option("--out", uni.out)->required();
  c->add_option("--config", uni.config, "JSON config")->check(CLI::ExistingFile);
  c->callback([&] { action = [&] { return RunUnion(uni); }; });

  ServeArgs serve;
  c = app.add_subcommand("mock-translator", "Serve the mock translator over HTTP");
  c->add_option("--table", serve.table, "Mock table (TSV)")->check(CLI::ExistingFile);
  c->add_option("--host", serve.host);
  c->add_option("--port", serve.port, "0 picks a free port");
  c->add_option("--port-file", serve.port_file, "Write the bound port here");
  c->callback([&] { action = [&] { return RunMockTranslator(serve); }; });

  CLI11_PARSE(app, argc, argv);
  absl::Status status = action();
  if (!status.ok()) {
    std::cerr << "kpaug " << app.get_subcommands().front()->get_name()
              << ": error: " << status.message() << "\n";
    return 1;
  }
  return 0;
}
