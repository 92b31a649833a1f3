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

#include "kpaug/fuse/union.h"

#include <unordered_map>

namespace kpaug {

std::vector<PredictionSet> UnionPredictions(
    std::span<const std::vector<PredictionSet>> collections,
    const SpecialTokens& special) {
  std::vector<PredictionSet> out;
  std::unordered_map<std::string, size_t> index;
  for (const auto& collection : collections) {
    for (const PredictionSet& set : collection) {
      auto [it, inserted] = index.emplace(set.doc_id, out.size());
      if (inserted) out.push_back({set.doc_id, {}});
      auto& merged = out[it->second].predictions;
      merged.insert(merged.end(), set.predictions.begin(), set.predictions.end());
    }
  }
  for (PredictionSet& set : out) {
    set.predictions = DedupStemmed(set.predictions, special);
  }
  return out;
}

}  // namespace kpaug
