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

#ifndef SIMPLEX_FEATURES_H_
#define SIMPLEX_FEATURES_H_

#include <array>
#include <cstddef>
#include <string_view>

#include "simplex/ngram_model.h"
#include "simplex/thesaurus.h"

namespace simplex {

inline constexpr size_t kNumFeatures = 5;

// Fixed order: unigram probability, sentence count, occurrence count, word
// length in characters, synset size.
using FeatureVector = std::array<double, kNumFeatures>;

// Out-of-vocabulary words get the model's floor probability and zero counts.
FeatureVector ExtractFeatures(std::string_view word, const NGramModel& model,
                              const Thesaurus& thesaurus);

// Number of UTF-8 code points in `word`.
size_t CharacterLength(std::string_view word);

}  // namespace simplex

#endif  // SIMPLEX_FEATURES_H_
