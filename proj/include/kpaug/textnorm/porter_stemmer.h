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

#ifndef KPAUG_TEXTNORM_PORTER_STEMMER_H_
#define KPAUG_TEXTNORM_PORTER_STEMMER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpaug/textnorm/token.h"

namespace kpaug {

// Porter's suffix-stripping algorithm, following the reference ANSI C
// release (including its "bli" -> "ble" and "logi" -> "log" step-2 rules).
// Only tokens made entirely of ASCII lowercase letters are stemmed; anything
// else is returned unchanged.
std::string Stem(std::string_view word);

std::vector<std::string> StemTokens(std::span<const Token> tokens);

// Stems every token of a phrase and joins them with single spaces.
std::string StemPhrase(std::string_view phrase,
                       const SpecialTokens& special = {});

}  // namespace kpaug

#endif  // KPAUG_TEXTNORM_PORTER_STEMMER_H_
