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

#ifndef SIMPLEX_RANKING_H_
#define SIMPLEX_RANKING_H_

#include <span>

#include "simplex/embeddings.h"
#include "simplex/ngram_model.h"
#include "simplex/sentence.h"

namespace simplex {

struct PerplexityScore {
  double pp1 = 0;
  double pp2 = 0;
  double combined = 0;  // (1 - phi) * pp1 + phi * pp2

  bool operator==(const PerplexityScore&) const = default;
};

// 2^(-(1/n) Σ log2 p(w_i)) with unigram probabilities.
double Pp1(const NGramModel& model, const Sentence& sentence);

// 2^(-(1/n) (log2 p(w_1) + Σ_{i>1} log2 p(w_i | w_{i-1}))).
double Pp2(const NGramModel& model, const Sentence& sentence);

// Throws ValidationError unless 0 <= phi <= 1.
PerplexityScore PpScore(const NGramModel& model, const Sentence& sentence,
                        double phi);

void ValidatePhi(double phi);

struct PerplexityRanking {
  size_t index = 0;  // into the candidate list
  PerplexityScore score;
  std::vector<PerplexityScore> scores;  // one per candidate
};

// Minimum combined score; ties go to the earliest candidate. Throws
// ValidationError for an empty list.
PerplexityRanking RankByPerplexity(const NGramModel& model,
                                   std::span<const Sentence> candidates,
                                   double phi);

struct CosineRanking {
  size_t index = 0;
  double cosine = 0;
  std::vector<double> cosines;
};

// Maximum cosine between embed(original) and embed(candidate); ties go to
// the earliest candidate. Provider errors propagate.
CosineRanking RankByCosine(const Sentence& original,
                           std::span<const Sentence> candidates,
                           const SentenceEmbedder& embedder);

}  // namespace simplex

#endif  // SIMPLEX_RANKING_H_
