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

#ifndef KPAUG_TEXTNORM_NORMALIZER_H_
#define KPAUG_TEXTNORM_NORMALIZER_H_

#include <string>
#include <string_view>

#include "kpaug/textnorm/token.h"

namespace kpaug {

// Cleans raw article text:
//   - control characters and literal escape sequences such as \n, \t or \u00e9
//     become whitespace,
//   - HTML tags, comments and character entities are removed,
//   - whitespace-delimited chunks that look like URLs or e-mail addresses are
//     dropped,
//   - ASCII letters are lowercased,
//   - a chunk whose core (leading/trailing punctuation stripped) contains a
//     digit has its core replaced by `special.digit`,
//   - whitespace is collapsed to single spaces and trimmed.
// Occurrences of the special markers are passed through verbatim, so the
// function is idempotent.
std::string Normalize(std::string_view raw, const SpecialTokens& special = {});

}  // namespace kpaug

#endif  // KPAUG_TEXTNORM_NORMALIZER_H_
