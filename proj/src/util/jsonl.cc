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

#include "kpaug/util/jsonl.h"
#include "kpaug/util/strings.h"

#include <cstdio>
#include <fstream>


namespace kpaug {

absl::Status ForEachJsonLine(
    const std::string& path,
    const std::function<absl::Status(const Json& record, int line)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (StripWhitespace(line).empty()) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::parse_error& e) {
      return absl::InvalidArgumentError(
          StrCat(path, ":", line_no, ": malformed record: ", e.what()));
    }
    if (!record.is_object()) {
      return absl::InvalidArgumentError(
          StrCat(path, ":", line_no, ": record is not an object"));
    }
    absl::Status status = fn(record, line_no);
    if (!status.ok()) {
      return absl::Status(status.code(), StrCat(path, ":", line_no, ": ",
                                                      std::string(status.message())));
    }
  }
  return absl::OkStatus();
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return absl::PermissionDeniedError(StrCat("cannot write ", tmp));
    out << text;
    if (!out.flush()) return absl::DataLossError(StrCat("write failed: ", tmp));
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    return absl::InternalError(StrCat("cannot rename ", tmp, " to ", path));
  }
  return absl::OkStatus();
}

absl::Status WriteJsonLines(const std::string& path,
                            const std::vector<Json>& records) {
  std::string text;
  for (const Json& record : records) {
    text += record.dump(-1, ' ', false, Json::error_handler_t::replace);
    text.push_back('\n');
  }
  return WriteTextFile(path, text);
}

absl::Status WriteJsonFile(const std::string& path, const Json& doc) {
  return WriteTextFile(
      path, doc.dump(2, ' ', false, Json::error_handler_t::replace) + "\n");
}

}  // namespace kpaug
