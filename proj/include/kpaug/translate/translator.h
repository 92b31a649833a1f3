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

#ifndef KPAUG_TRANSLATE_TRANSLATOR_H_
#define KPAUG_TRANSLATE_TRANSLATOR_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "kpaug/util/jsonl.h"

namespace kpaug {

struct TranslateRequest {
  std::vector<std::string> texts;
  std::string source;
  std::string target;
  double temperature = 0.7;

  // texts non-empty, languages set and different, temperature >= 0.
  absl::Status Validate() const;
  Json ToJson() const;
  static absl::StatusOr<TranslateRequest> FromJson(const Json& body);
};

// Error kinds reported by translators, told apart by status code:
//   network failure      -> kUnavailable
//   non-success HTTP     -> kInternal
//   misaligned response  -> kDataLoss
bool IsNetworkError(const absl::Status& status);
bool IsHttpStatusError(const absl::Status& status);
bool IsAlignmentError(const absl::Status& status);

class Translator {
 public:
  virtual ~Translator() = default;

  // One translation per input text, in input order.
  virtual absl::StatusOr<std::vector<std::string>> TranslateBatch(
      const TranslateRequest& request) = 0;

  // Short identification for manifests, e.g. the endpoint URL.
  virtual std::string Describe() const = 0;
};

}  // namespace kpaug

#endif  // KPAUG_TRANSLATE_TRANSLATOR_H_
