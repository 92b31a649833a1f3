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

#include "kpaug/translate/mock_translator.h"

#include <fstream>
#include <sstream>

#include "kpaug/util/strings.h"

namespace kpaug {
namespace {

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace

MockTranslator::MockTranslator(const Table& table, std::string home_language)
    : home_language_(std::move(home_language)) {
  for (const auto& [from, to] : table) {
    std::vector<std::string> key = Words(from);
    if (key.empty()) continue;
    longest_key_ = std::max(longest_key_, key.size());
    table_.emplace(std::move(key), Words(to));
  }
}

absl::StatusOr<MockTranslator> MockTranslator::Parse(std::string_view text,
                                                     std::string_view source) {
  Table table;
  std::map<std::vector<std::string>, int> seen;
  int line_no = 0;
  for (std::string_view line : SplitString(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (StripWhitespace(line).empty() || line.front() == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      return absl::InvalidArgumentError(
          StrCat(source, ":", line_no, ": expected phrase<TAB>replacement"));
    }
    std::vector<std::string> key = Words(line.substr(0, tab));
    if (key.empty()) {
      return absl::InvalidArgumentError(
          StrCat(source, ":", line_no, ": empty source phrase"));
    }
    if (auto [it, inserted] = seen.emplace(key, line_no); !inserted) {
      return absl::InvalidArgumentError(
          StrCat(source, ":", line_no, ": phrase already defined on line ",
                 it->second));
    }
    table.emplace_back(std::string(line.substr(0, tab)),
                       std::string(line.substr(tab + 1)));
  }
  return MockTranslator(table);
}

absl::StatusOr<MockTranslator> MockTranslator::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path);
}

std::string MockTranslator::Substitute(std::string_view text) const {
  std::vector<std::string> words = Words(text);
  std::vector<std::string> out;
  size_t i = 0;
  while (i < words.size()) {
    bool replaced = false;
    for (size_t len = std::min(longest_key_, words.size() - i); len > 0; --len) {
      std::vector<std::string> key(words.begin() + i, words.begin() + i + len);
      auto it = table_.find(key);
      if (it == table_.end()) continue;
      out.insert(out.end(), it->second.begin(), it->second.end());
      i += len;
      replaced = true;
      break;
    }
    if (!replaced) out.push_back(words[i++]);
  }
  return JoinStrings(out, " ");
}

std::vector<std::string> MockTranslator::Apply(
    Direction direction, const std::vector<std::string>& texts) const {
  if (direction == Direction::kBackward) return texts;
  std::vector<std::string> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(Substitute(t));
  return out;
}

absl::StatusOr<std::vector<std::string>> MockTranslator::TranslateBatch(
    const TranslateRequest& request) {
  if (absl::Status s = request.Validate(); !s.ok()) return s;
  return Apply(request.source == home_language_ ? Direction::kForward
                                                : Direction::kBackward,
               request.texts);
}

std::string MockTranslator::Describe() const {
  return StrCat("mock:", table_.size(), "-entries");
}

}  // namespace kpaug
