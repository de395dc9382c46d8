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

#ifndef SIMPLEX_PIPELINE_H_
#define SIMPLEX_PIPELINE_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplex/classifier.h"
#include "simplex/embeddings.h"
#include "simplex/morphology.h"
#include "simplex/ngram_model.h"
#include "simplex/pos.h"
#include "simplex/ranking.h"
#include "simplex/sentence.h"
#include "simplex/thesaurus.h"

namespace simplex {

enum class Mode { kWordEmbedding, kTransformer };

std::string_view ModeName(Mode mode);  // "we" / "transformer"
std::optional<Mode> ParseMode(std::string_view name);

struct SimplificationConfig {
  Mode mode = Mode::kWordEmbedding;
  double phi = 0.0;
};

// Borrowed, read-only resources. `word_vectors` is required in word-embedding
// mode, `embedder` in transformer mode.
struct PipelineResources {
  const NGramModel* model = nullptr;
  const ComplexityClassifier* classifier = nullptr;
  const Thesaurus* thesaurus = nullptr;
  const Morphology* morphology = nullptr;
  const WordVectorStore* word_vectors = nullptr;
  const SentenceEmbedder* embedder = nullptr;
};

struct CandidateScore {
  std::string synonym;
  std::string sentence;
  // Combined perplexity in word-embedding mode, sentence cosine in
  // transformer mode.
  double score = 0;
};

// What happened at one position predicted complex. The synonym lists form a
// chain: chosen ∈ survivors ⊆ simple_synonyms ⊆ fetched.
struct ReplacementTrace {
  size_t position = 0;  // 0-based
  std::string original;
  std::array<double, 2> probabilities = {0, 0};  // (simple, complex)
  PosTag tag = PosTag::kOther;
  std::string lemma;
  std::optional<Inflection> inflection;
  std::vector<std::string> fetched;          // re-inflected surface forms
  std::vector<std::string> simple_synonyms;  // after the complexity filter
  std::vector<std::string> survivors;        // after the cosine filter
  bool cosine_filter_skipped = false;        // word had no vector
  std::vector<CandidateScore> candidates;
  std::optional<std::string> chosen;
  std::optional<PerplexityScore> chosen_pp;  // score of the new sentence
  std::string error;  // provider failure at this position, else empty
};

struct SimplificationResult {
  Sentence output;
  std::vector<ReplacementTrace> traces;
  PerplexityScore pp_score;  // of `output` under the config's phi
};

// One candidate per synonym with position `k` (0-based) replaced and a
// preceding a/an made to agree. Order follows `synonyms`.
std::vector<Sentence> GenerateCandidates(const Sentence& sentence, size_t k,
                                         std::span<const std::string> synonyms);

// Keeps synonyms the classifier labels simple, in order.
std::vector<std::string> FilterSynonymsComplexity(
    std::span<const std::string> synonyms,
    const ComplexityClassifier& classifier, const NGramModel& model,
    const Thesaurus& thesaurus);

struct CosineFilterResult {
  std::vector<std::string> kept;
  // False when `word` itself has no vector; `kept` is then the input.
  bool applied = true;
  // cos(word, synonym) for every synonym that has a vector, input order.
  std::vector<std::pair<std::string, double>> cosines;
};

// Keeps synonyms whose cosine with `word` is strictly above the mean over
// synonyms that have vectors; synonyms without vectors are dropped. If that
// leaves nothing, the first max-cosine synonym is kept.
CosineFilterResult FilterSynonymsCosine(std::string_view word,
                                        std::span<const std::string> synonyms,
                                        const WordVectorStore& store);

// Words shorter than 3 characters or without letters are never considered.
bool IsReplaceable(std::string_view word);

// Left-to-right lexical simplification over a working sentence: each
// replacement is visible to the words after it. Reentrant; resources must
// outlive the object.
class Simplifier {
 public:
  // Throws ValidationError if model, classifier, thesaurus or morphology is
  // missing.
  explicit Simplifier(PipelineResources resources);

  // Throws ValidationError for an invalid phi or when the mode's resource is
  // missing. Provider failures never throw; they are recorded per position.
  SimplificationResult Simplify(const Sentence& sentence,
                                const SimplificationConfig& config) const;

  ComplexityLabel PredictComplexity(std::string_view word) const;

  const PipelineResources& resources() const { return r_; }

 private:
  void ProcessPosition(Sentence& working, size_t k,
                       const SimplificationConfig& config,
                       ReplacementTrace& trace) const;

  PipelineResources r_;
};

}  // namespace simplex

#endif  // SIMPLEX_PIPELINE_H_
