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

#include "simplex/ranking.h"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "simplex/errors.h"

namespace simplex {

void ValidatePhi(double phi) {
  if (!(phi >= 0.0 && phi <= 1.0)) {
    throw ValidationError(fmt::format("phi {} outside [0, 1]", phi));
  }
}

double Pp1(const NGramModel& model, const Sentence& sentence) {
  double log_sum = 0;
  for (const std::string& w : sentence.tokens()) {
    log_sum += std::log2(model.UnigramProb(w));
  }
  return std::exp2(-log_sum / static_cast<double>(sentence.size()));
}

double Pp2(const NGramModel& model, const Sentence& sentence) {
  double log_sum = std::log2(model.UnigramProb(sentence[0]));
  for (size_t i = 1; i < sentence.size(); ++i) {
    log_sum += std::log2(model.BigramProb(sentence[i - 1], sentence[i]));
  }
  return std::exp2(-log_sum / static_cast<double>(sentence.size()));
}

PerplexityScore PpScore(const NGramModel& model, const Sentence& sentence,
                        double phi) {
  ValidatePhi(phi);
  PerplexityScore s;
  s.pp1 = Pp1(model, sentence);
  s.pp2 = Pp2(model, sentence);
  s.combined = (1.0 - phi) * s.pp1 + phi * s.pp2;
  return s;
}

PerplexityRanking RankByPerplexity(const NGramModel& model,
                                   std::span<const Sentence> candidates,
                                   double phi) {
  if (candidates.empty()) throw ValidationError("no candidates to rank");
  PerplexityRanking r;
  r.scores.reserve(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    r.scores.push_back(PpScore(model, candidates[i], phi));
    if (i == 0 || r.scores[i].combined < r.scores[r.index].combined) r.index = i;
  }
  r.score = r.scores[r.index];
  return r;
}

CosineRanking RankByCosine(const Sentence& original,
                           std::span<const Sentence> candidates,
                           const SentenceEmbedder& embedder) {
  if (candidates.empty()) throw ValidationError("no candidates to rank");
  std::vector<Sentence> batch;
  batch.reserve(candidates.size() + 1);
  batch.push_back(original);
  batch.insert(batch.end(), candidates.begin(), candidates.end());
  const std::vector<EmbeddingVector> vectors = embedder.EmbedBatch(batch);
  if (vectors.size() != batch.size()) {
    throw ProviderError("embedder returned the wrong number of vectors");
  }
  CosineRanking r;
  r.cosines.reserve(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    r.cosines.push_back(Cosine(vectors[0], vectors[i + 1]));
    if (i == 0 || r.cosines[i] > r.cosines[r.index]) r.index = i;
  }
  r.cosine = r.cosines[r.index];
  return r;
}

}  // namespace simplex
