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

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <thread>

#include "gtest/gtest.h"
#include "kpaug/util/jsonl.h"

namespace kpaug {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string output;
};

// Runs the CLI with stderr folded into the captured output.
Result Kpaug(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " KPAUG_CLI " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Data(const std::string& name) {
  return std::string(KPAUG_DATA_DIR) + "/" + name;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kpaug-cli-" + std::to_string(getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  void Preprocess() {
    ASSERT_EQ(Kpaug("preprocess --in " + Data("toy_corpus.jsonl") + " --out " +
                  P("c.jsonl")).code, 0);
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrorsExitNonZero) {
  EXPECT_NE(Kpaug("").code, 0);
  EXPECT_NE(Kpaug("stats --in " + Data("toy_corpus.jsonl") + " --bogus 1").code, 0);
  Result r = Kpaug("augment --in " + Data("toy_corpus.jsonl") + " --out " + P("x") +
                 " --strategy nope");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.output.find("kpaug augment: error:"), std::string::npos);
}

TEST_F(CliTest, MalformedInputNamesFileAndLine) {
  std::ofstream(P("bad.jsonl")) << "{\"id\": \"a\", \"predictions\": []}\n{oops\n";
  Result r = Kpaug("union --preds " + P("bad.jsonl") + " --out " + P("u.jsonl"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.output.find(P("bad.jsonl") + ":2:"), std::string::npos) << r.output;
  EXPECT_FALSE(fs::exists(P("u.jsonl")));
}

TEST_F(CliTest, ConfigOverridesAndManifest) {
  Preprocess();
  std::ofstream(P("cfg.json")) << R"({"kpd_prob": 1.0, "mask_token": "[MASK]"})";
  ASSERT_EQ(Kpaug("augment --in " + P("c.jsonl") + " --out " + P("a.jsonl") +
                " --strategy ta_kpd --seed 4 --config " + P("cfg.json")).code, 0);
  Json manifest = Json::parse(Slurp(P("a.jsonl.manifest.json")));
  EXPECT_EQ(manifest["command"], "augment");
  EXPECT_EQ(manifest["config"]["kpd_prob"], 1.0);
  EXPECT_EQ(manifest["config"]["seed"], 4);
  EXPECT_EQ(manifest["seeds"]["seed"], 4);
  EXPECT_EQ(manifest["inputs"][0]["path"], P("c.jsonl"));
  EXPECT_EQ(manifest["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  EXPECT_TRUE(manifest.contains("created_at"));

  std::ofstream(P("bad.json")) << R"({"kpd_probability": 1.0})";
  Result r = Kpaug("augment --in " + P("c.jsonl") + " --out " + P("b.jsonl") +
                 " --strategy ta_kpd --config " + P("bad.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.output.find("kpd_probability"), std::string::npos) << r.output;
}

TEST_F(CliTest, ReportsAndUnionOrder) {
  Preprocess();
  Result r = Kpaug("audit --in " + P("c.jsonl") + " --out " + P("audit.json") +
                 " --table " + P("audit.txt"));
  ASSERT_EQ(r.code, 0) << r.output;
  EXPECT_EQ(Slurp(P("audit.txt")), r.output);
  Json audit = Json::parse(Slurp(P("audit.json")));
  EXPECT_EQ(audit["present"].get<int>() + audit["absent"].get<int>(),
            audit["total"].get<int>());

  ASSERT_EQ(Kpaug("coverage --in " + P("c.jsonl") + " --lexicon " +
                Data("toy_lexicon.tsv") + " --strategy body_kpsr --out " +
                P("cov.json")).code, 0);
  EXPECT_NE(Kpaug("coverage --in " + P("c.jsonl") + " --lexicon " +
                Data("toy_lexicon.tsv") + " --strategy body_kpd --out " +
                P("cov2.json")).code, 0);

  std::ofstream(P("p1.jsonl")) << "{\"id\":\"toy-00\",\"predictions\":[\"b\",\"networks\"]}\n";
  std::ofstream(P("p2.jsonl")) << "{\"id\":\"toy-00\",\"predictions\":[\"network\",\"a\"]}\n";
  ASSERT_EQ(Kpaug("union --preds " + P("p1.jsonl") + " --preds " + P("p2.jsonl") +
                " --out " + P("u.jsonl")).code, 0);
  EXPECT_EQ(Slurp(P("u.jsonl")),
            "{\"id\":\"toy-00\",\"predictions\":[\"b\",\"networks\",\"a\"]}\n");
  Json manifest = Json::parse(Slurp(P("u.jsonl.manifest.json")));
  EXPECT_EQ(manifest["model_order"][0], P("p1.jsonl"));
  EXPECT_EQ(manifest["model_order"][1], P("p2.jsonl"));
}

TEST_F(CliTest, SegmentNewsFeedsPreprocess) {
  std::string text;
  for (int s = 0; s < 40; ++s) text += "The council met again on the river plan today. ";
  std::ofstream(P("news.jsonl"))
      << Json{{"id", "n1"}, {"headline", "Council Meets"}, {"text", text},
              {"keyphrases", {"council", "river plan"}}}.dump()
      << "\n";
  ASSERT_EQ(Kpaug("segment-news --in " + P("news.jsonl") + " --out " + P("raw.jsonl")).code, 0);
  Json raw = Json::parse(Slurp(P("raw.jsonl")));
  EXPECT_EQ(raw["title"], "council meets");
  ASSERT_EQ(Kpaug("preprocess --in " + P("raw.jsonl") + " --out " + P("c.jsonl")).code, 0);
  Json doc = Json::parse(Slurp(P("c.jsonl")));
  EXPECT_EQ(doc["id"], "n1");
}

TEST_F(CliTest, BackTranslationThroughServedMock) {
  Preprocess();
  const pid_t server = fork();
  ASSERT_GE(server, 0);
  if (server == 0) {
    if (!freopen("/dev/null", "w", stdout)) _exit(127);
    execl(KPAUG_CLI, KPAUG_CLI, "mock-translator", "--table",
          Data("table1_mock_translation.tsv").c_str(), "--port-file",
          P("port").c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  std::string port;
  for (int i = 0; i < 100 && port.empty(); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
    port = Slurp(P("port"));
  }
  ASSERT_FALSE(port.empty());
  while (!port.empty() && port.back() == '\n') port.pop_back();

  Result r = Kpaug("augment --in " + P("c.jsonl") + " --out " + P("http.jsonl") +
                     " --strategy ta_bt",
                 "KPAUG_TRANSLATOR_ENDPOINT=http://127.0.0.1:" + port);
  EXPECT_EQ(r.code, 0) << r.output;
  ASSERT_EQ(Kpaug("augment --in " + P("c.jsonl") + " --out " + P("local.jsonl") +
                " --strategy ta_bt --mock-table " +
                Data("table1_mock_translation.tsv")).code, 0);
  EXPECT_EQ(Slurp(P("http.jsonl")), Slurp(P("local.jsonl")));

  kill(server, SIGTERM);
  int status = 0;
  waitpid(server, &status, 0);
  EXPECT_TRUE(WIFEXITED(status) && WEXITSTATUS(status) == 0);

  r = Kpaug("augment --in " + P("c.jsonl") + " --out " + P("none.jsonl") +
          " --strategy ta_bt", "env -u KPAUG_TRANSLATOR_ENDPOINT");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.output.find("KPAUG_TRANSLATOR_ENDPOINT"), std::string::npos);
}

}  // namespace
}  // namespace kpaug
