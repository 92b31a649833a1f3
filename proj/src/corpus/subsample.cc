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

#include "kpaug/corpus/subsample.h"

#include "absl/status/status.h"
#include "kpaug/util/random.h"
#include "kpaug/util/strings.h"

namespace kpaug {

absl::StatusOr<Corpus> Subsample(const Corpus& corpus, size_t n, uint64_t seed) {
  if (n > corpus.size()) {
    return absl::InvalidArgumentError(StrCat(
        "cannot sample ", n, " documents from a corpus of ", corpus.size()));
  }
  Rng rng(DeriveSeed(seed, {"subsample"}));
  Corpus sample;
  sample.config_fingerprint = corpus.config_fingerprint;
  for (size_t index : rng.SampleWithoutReplacement(corpus.size(), n)) {
    sample.documents.push_back(corpus.documents[index]);
  }
  return sample;
}

}  // namespace kpaug
