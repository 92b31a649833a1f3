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

#include "kpaug/translate/http_translator.h"

#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "httplib.h"
#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

constexpr std::string_view kScheme = "http://";

bool Retryable(int http_status) {
  return http_status == 429 || http_status >= 500;
}

std::string ErrorMessage(const std::string& body) {
  Json parsed = Json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_object() && parsed.contains("error") &&
      parsed["error"].is_string()) {
    return parsed["error"].get<std::string>();
  }
  return body.substr(0, 200);
}

void SetSeconds(double seconds, time_t* sec, time_t* usec) {
  *sec = static_cast<time_t>(seconds);
  *usec = static_cast<time_t>((seconds - static_cast<double>(*sec)) * 1e6);
}

}  // namespace

HttpTranslator::HttpTranslator(HttpTranslatorOptions options, std::string base,
                               std::string path)
    : options_(std::move(options)),
      base_(std::move(base)),
      path_(std::move(path)),
      in_flight_(options_.max_in_flight) {}

absl::StatusOr<std::unique_ptr<HttpTranslator>> HttpTranslator::Create(
    HttpTranslatorOptions options) {
  std::string_view endpoint = options.endpoint;
  if (endpoint.substr(0, kScheme.size()) != kScheme) {
    return absl::InvalidArgumentError(
        StrCat("translator endpoint must start with http://, got '", endpoint,
               "'"));
  }
  const size_t slash = endpoint.find('/', kScheme.size());
  std::string base(endpoint.substr(0, slash));
  std::string prefix(slash == std::string_view::npos ? std::string_view()
                                                     : endpoint.substr(slash));
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  if (base.size() == kScheme.size()) {
    return absl::InvalidArgumentError("translator endpoint has no host");
  }
  if (options.max_attempts < 1 || options.max_in_flight < 1 ||
      options.max_in_flight > 1024 || options.timeout_seconds <= 0) {
    return absl::InvalidArgumentError("invalid translator client options");
  }
  return std::unique_ptr<HttpTranslator>(new HttpTranslator(
      std::move(options), std::move(base), prefix + "/translate"));
}

absl::StatusOr<std::vector<std::string>> HttpTranslator::Attempt(
    const std::string& body, size_t expected) {
  httplib::Client client(base_);
  time_t sec, usec;
  SetSeconds(options_.timeout_seconds, &sec, &usec);
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);

  auto result = client.Post(path_, body, "application/json");
  if (!result) {
    return absl::UnavailableError(StrCat("POST ", base_, path_, ": ",
                                         httplib::to_string(result.error())));
  }
  if (result->status != 200) {
    return absl::InternalError(StrCat("POST ", base_, path_, ": HTTP ",
                                      result->status, ": ",
                                      ErrorMessage(result->body)));
  }
  Json parsed = Json::parse(result->body, nullptr, /*allow_exceptions=*/false);
  if (!parsed.is_object() || !parsed.contains("translations") ||
      !parsed["translations"].is_array()) {
    return absl::DataLossError("response has no translations array");
  }
  std::vector<std::string> out;
  for (const Json& t : parsed["translations"]) {
    if (!t.is_string()) {
      return absl::DataLossError("translations must be strings");
    }
    out.push_back(t.get<std::string>());
  }
  if (out.size() != expected) {
    return absl::DataLossError(StrCat("expected ", expected,
                                      " translations, got ", out.size()));
  }
  return out;
}

absl::StatusOr<std::vector<std::string>> HttpTranslator::TranslateBatch(
    const TranslateRequest& request) {
  if (absl::Status s = request.Validate(); !s.ok()) return s;
  const std::string body = request.ToJson().dump();

  in_flight_.acquire();
  absl::StatusOr<std::vector<std::string>> result;
  int backoff_ms = options_.initial_backoff_ms;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    result = Attempt(body, request.texts.size());
    if (result.ok()) break;
    bool transient = IsNetworkError(result.status());
    if (IsHttpStatusError(result.status())) {
      // The message carries "HTTP <code>"; the code decides retrying.
      const std::string msg(result.status().message());
      const size_t at = msg.find(": HTTP ");
      transient = at != std::string::npos &&
                  Retryable(std::atoi(msg.c_str() + at + 7));
    }
    if (!transient || attempt == options_.max_attempts) {
      result = absl::Status(
          result.status().code(),
          StrCat(result.status().message(), " (attempt ", attempt, " of ",
                 options_.max_attempts, ")"));
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
    backoff_ms *= 2;
  }
  in_flight_.release();
  return result;
}

absl::StatusOr<std::string> TranslatorEndpointFromEnvironment() {
  const char* value = std::getenv(kTranslatorEndpointEnv);
  if (value == nullptr || *value == '\0') {
    return absl::NotFoundError(StrCat(kTranslatorEndpointEnv, " is not set"));
  }
  return std::string(value);
}

struct TranslatorServer::Impl {
  explicit Impl(Translator& t) : translator(t) {}
  Translator& translator;
  std::mutex mu;
  httplib::Server server;
};

TranslatorServer::TranslatorServer(Translator& translator)
    : impl_(std::make_unique<Impl>(translator)) {
  impl_->server.Post("/translate", [this](const httplib::Request& req,
                                          httplib::Response& res) {
    auto reply = [&](int status, const Json& body) {
      res.status = status;
      res.set_content(body.dump(), "application/json");
    };
    Json body = Json::parse(req.body, nullptr, /*allow_exceptions=*/false);
    if (body.is_discarded()) {
      reply(400, {{"error", "request body is not JSON"}});
      return;
    }
    auto request = TranslateRequest::FromJson(body);
    if (!request.ok()) {
      reply(400, {{"error", std::string(request.status().message())}});
      return;
    }
    absl::StatusOr<std::vector<std::string>> out;
    {
      std::lock_guard<std::mutex> lock(impl_->mu);
      out = impl_->translator.TranslateBatch(*request);
    }
    if (!out.ok()) {
      reply(500, {{"error", std::string(out.status().message())}});
      return;
    }
    reply(200, {{"translations", *out}});
  });
}

TranslatorServer::~TranslatorServer() { Stop(); }

absl::StatusOr<int> TranslatorServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) return absl::UnavailableError(StrCat("cannot bind ", host));
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    return absl::UnavailableError(StrCat("cannot bind ", host, ":", port));
  }
  return port;
}

absl::Status TranslatorServer::Serve() {
  if (!impl_->server.listen_after_bind()) {
    return absl::UnavailableError("translator server stopped with an error");
  }
  return absl::OkStatus();
}

void TranslatorServer::Stop() {
  if (impl_) impl_->server.stop();
}

void TranslatorServer::WaitUntilReady() { impl_->server.wait_until_ready(); }

}  // namespace kpaug
