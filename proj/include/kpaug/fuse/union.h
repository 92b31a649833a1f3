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
#ifndef KPAUG_FUSE_UNION_H_
#define KPAUG_FUSE_UNION_H_

#include <span>
#include <vector>

#include "kpaug/metrics/metrics.h"

namespace kpaug {

// Per document, the prediction lists of `collections` concatenated in the
// given order and deduplicated by stem, first occurrence kept. Documents are
// emitted in order of first appearance across the collections; a document
// missing from a collection contributes nothing from it. No truncation.
std::vector<PredictionSet> UnionPredictions(
    std::span<const std::vector<PredictionSet>> collections,
    const SpecialTokens& special = {});

}  // namespace kpaug

#endif  // KPAUG_FUSE_UNION_H_
