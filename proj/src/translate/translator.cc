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

#include "kpaug/translate/translator.h"

#include "kpaug/util/strings.h"

namespace kpaug {

absl::Status TranslateRequest::Validate() const {
  if (texts.empty()) return absl::InvalidArgumentError("texts is empty");
  if (source.empty() || target.empty()) {
    return absl::InvalidArgumentError("source and target must be set");
  }
  if (source == target) {
    return absl::InvalidArgumentError(
        StrCat("source and target are both '", source, "'"));
  }
  if (!(temperature >= 0)) {
    return absl::InvalidArgumentError(
        StrCat("temperature must be >= 0, got ", temperature));
  }
  return absl::OkStatus();
}

Json TranslateRequest::ToJson() const {
  return Json{{"texts", texts},
              {"source", source},
              {"target", target},
              {"temperature", temperature}};
}

absl::StatusOr<TranslateRequest> TranslateRequest::FromJson(const Json& body) {
  if (!body.is_object()) return absl::InvalidArgumentError("expected an object");
  TranslateRequest request;
  try {
    request.texts = body.at("texts").get<std::vector<std::string>>();
    request.source = body.at("source").get<std::string>();
    request.target = body.at("target").get<std::string>();
    if (body.contains("temperature")) {
      request.temperature = body.at("temperature").get<double>();
    }
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(StrCat("bad request: ", e.what()));
  }
  if (absl::Status s = request.Validate(); !s.ok()) return s;
  return request;
}

bool IsNetworkError(const absl::Status& status) {
  return status.code() == absl::StatusCode::kUnavailable;
}

bool IsHttpStatusError(const absl::Status& status) {
  return status.code() == absl::StatusCode::kInternal;
}

bool IsAlignmentError(const absl::Status& status) {
  return status.code() == absl::StatusCode::kDataLoss;
}

}  // namespace kpaug
