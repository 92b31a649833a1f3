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

#ifndef KPAUG_TEXTNORM_TOKENIZER_H_
#define KPAUG_TEXTNORM_TOKENIZER_H_

#include <string_view>
#include <vector>

#include "kpaug/textnorm/token.h"

namespace kpaug {

// Splits on whitespace. Special markers are cut out of each chunk as atomic
// tokens; every leading and trailing ASCII punctuation character of the
// remaining pieces becomes its own token. Word-internal punctuation
// ("knowledge-based", "e.g", "don't") stays attached.
//
// Tokenize(JoinTokens(Tokenize(t))) == Tokenize(t) for every input.
std::vector<Token> Tokenize(std::string_view text,
                            const SpecialTokens& special = {});

}  // namespace kpaug

#endif  // KPAUG_TEXTNORM_TOKENIZER_H_
