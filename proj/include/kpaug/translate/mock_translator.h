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

#ifndef KPAUG_TRANSLATE_MOCK_TRANSLATOR_H_
#define KPAUG_TRANSLATE_MOCK_TRANSLATOR_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "kpaug/translate/translator.h"

namespace kpaug {

// Deterministic stand-in for a translation service. Requests leaving the home
// language (the forward leg) get table substitutions; requests in any other
// direction come back unchanged. Temperature is ignored.
class MockTranslator : public Translator {
 public:
  enum class Direction { kForward, kBackward };
  using Table = std::vector<std::pair<std::string, std::string>>;

  // Keys and replacements are whitespace-separated token sequences.
  explicit MockTranslator(const Table& table = {},
                          std::string home_language = "en");

  // TSV, one "source phrase<TAB>replacement" per line; '#' starts a comment
  // line.
  static absl::StatusOr<MockTranslator> Load(const std::string& path);
  static absl::StatusOr<MockTranslator> Parse(std::string_view text,
                                              std::string_view source = "<table>");

  // Forward: scan tokens left to right, replacing the longest table key that
  // starts at the current token. Backward: identity.
  std::vector<std::string> Apply(Direction direction,
                                 const std::vector<std::string>& texts) const;

  absl::StatusOr<std::vector<std::string>> TranslateBatch(
      const TranslateRequest& request) override;
  std::string Describe() const override;

  size_t size() const { return table_.size(); }

 private:
  std::string Substitute(std::string_view text) const;

  std::map<std::vector<std::string>, std::vector<std::string>> table_;
  size_t longest_key_ = 0;
  std::string home_language_;
};

}  // namespace kpaug

#endif  // KPAUG_TRANSLATE_MOCK_TRANSLATOR_H_
