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

#ifndef KPAUG_UTIL_JSONL_H_
#define KPAUG_UTIL_JSONL_H_

#include <functional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "json.hpp"

namespace kpaug {

using Json = nlohmann::ordered_json;

// Calls `fn` for every non-blank line of a line-delimited JSON file. Parse
// failures and errors returned by `fn` are prefixed with "path:line: ".
absl::Status ForEachJsonLine(
    const std::string& path,
    const std::function<absl::Status(const Json& record, int line)>& fn);

// Writes one compact record per line. The file is replaced atomically.
absl::Status WriteJsonLines(const std::string& path,
                            const std::vector<Json>& records);

// Writes a pretty-printed JSON document, replacing the file atomically.
absl::Status WriteJsonFile(const std::string& path, const Json& doc);

absl::Status WriteTextFile(const std::string& path, const std::string& text);

}  // namespace kpaug

#endif  // KPAUG_UTIL_JSONL_H_
