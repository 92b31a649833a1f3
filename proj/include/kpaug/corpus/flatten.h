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

#ifndef KPAUG_CORPUS_FLATTEN_H_
#define KPAUG_CORPUS_FLATTEN_H_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "kpaug/corpus/document.h"

namespace kpaug {

inline constexpr size_t kNoWordCap = std::numeric_limits<size_t>::max();

struct FlattenOptions {
  SpecialTokens special;
  // Cap on body tokens (delimiters excluded); the body is cut at a token
  // boundary once the cap is reached.
  size_t max_body_words = 800;
};

// Title, abstract and body in that order, restricted to `parts`. The
// delimiter separates non-empty parts and consecutive body sentences;
// abstract sentences are joined without one.
std::vector<Token> FlattenTokens(const Document& doc, PartSet parts,
                                 const FlattenOptions& options = {});

std::string FlattenInput(const Document& doc, PartSet parts,
                         const FlattenOptions& options = {});

// Body sentences truncated to `max_words` tokens.
std::vector<Sentence> CapBody(const std::vector<Sentence>& body,
                              size_t max_words);

// Number of tokens that are not the delimiter.
size_t CountWords(std::span<const Token> tokens,
                  const SpecialTokens& special = {});

}  // namespace kpaug

#endif  // KPAUG_CORPUS_FLATTEN_H_
