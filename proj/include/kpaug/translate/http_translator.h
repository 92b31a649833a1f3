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

#ifndef KPAUG_TRANSLATE_HTTP_TRANSLATOR_H_
#define KPAUG_TRANSLATE_HTTP_TRANSLATOR_H_

#include <memory>
#include <semaphore>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "kpaug/translate/translator.h"

namespace kpaug {

inline constexpr char kTranslatorEndpointEnv[] = "KPAUG_TRANSLATOR_ENDPOINT";

struct HttpTranslatorOptions {
  // http://host:port, optionally followed by a path prefix.
  std::string endpoint;
  double timeout_seconds = 60;
  int max_attempts = 3;
  // Doubles after every failed attempt.
  int initial_backoff_ms = 200;
  // Concurrent requests allowed through this client.
  int max_in_flight = 4;
};

// Client for POST <endpoint>/translate:
//   request  {"texts": [...], "source": "en", "target": "fr", "temperature": 0.7}
//   response 200 {"translations": [...]}, otherwise {"error": "..."}
// Network failures, 5xx and 429 are retried; other statuses fail at once.
class HttpTranslator : public Translator {
 public:
  static absl::StatusOr<std::unique_ptr<HttpTranslator>> Create(
      HttpTranslatorOptions options);

  absl::StatusOr<std::vector<std::string>> TranslateBatch(
      const TranslateRequest& request) override;
  std::string Describe() const override { return options_.endpoint; }

 private:
  HttpTranslator(HttpTranslatorOptions options, std::string base,
                 std::string path);

  absl::StatusOr<std::vector<std::string>> Attempt(const std::string& body,
                                                   size_t expected);

  HttpTranslatorOptions options_;
  std::string base_;
  std::string path_;
  std::counting_semaphore<1024> in_flight_;
};

// Value of KPAUG_TRANSLATOR_ENDPOINT, or NotFound when unset or empty.
absl::StatusOr<std::string> TranslatorEndpointFromEnvironment();

// Serves a translator over the wire protocol above.
class TranslatorServer {
 public:
  explicit TranslatorServer(Translator& translator);
  ~TranslatorServer();

  // Binds to `port`, or to a free port when 0; returns the bound port.
  absl::StatusOr<int> Bind(const std::string& host, int port);
  // Serves until Stop() is called from another thread.
  absl::Status Serve();
  void Stop();
  // Blocks until the server accepts connections.
  void WaitUntilReady();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace kpaug

#endif  // KPAUG_TRANSLATE_HTTP_TRANSLATOR_H_
