// Copyright 2026 The Simplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simplex/features.h"

namespace simplex {

size_t CharacterLength(std::string_view word) {
  size_t n = 0;
  for (char c : word) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

FeatureVector ExtractFeatures(std::string_view word, const NGramModel& model,
                              const Thesaurus& thesaurus) {
  const WordStats stats = model.Stats(word);
  return {model.UnigramProb(word), static_cast<double>(stats.sentence_count),
          static_cast<double>(stats.occurrences),
          static_cast<double>(CharacterLength(word)),
          static_cast<double>(thesaurus.SynsetSize(word))};
}

}  // namespace simplex
