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

#ifndef KPAUG_CORPUS_SUBSAMPLE_H_
#define KPAUG_CORPUS_SUBSAMPLE_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "kpaug/corpus/document.h"

namespace kpaug {

// Uniform sample of `n` documents without replacement, kept in corpus order.
absl::StatusOr<Corpus> Subsample(const Corpus& corpus, size_t n, uint64_t seed);

}  // namespace kpaug

#endif  // KPAUG_CORPUS_SUBSAMPLE_H_
