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

#include "simplex/pipeline.h"

#include <algorithm>

#include <fmt/format.h>

#include "simplex/errors.h"
#include "simplex/features.h"
#include "string_util.h"

namespace simplex {
namespace {

bool HasLetter(std::string_view word) {
  return std::any_of(word.begin(), word.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

bool HasSpace(std::string_view word) {
  return std::any_of(word.begin(), word.end(), internal::IsSpace);
}

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kWordEmbedding ? "we" : "transformer";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "we") return Mode::kWordEmbedding;
  if (name == "transformer") return Mode::kTransformer;
  return std::nullopt;
}

bool IsReplaceable(std::string_view word) {
  return CharacterLength(word) >= 3 && HasLetter(word);
}

std::vector<Sentence> GenerateCandidates(
    const Sentence& sentence, size_t k,
    std::span<const std::string> synonyms) {
  if (k >= sentence.size()) {
    throw ValidationError(
        fmt::format("position {} outside a {}-token sentence", k, sentence.size()));
  }
  std::vector<Sentence> out;
  out.reserve(synonyms.size());
  for (const std::string& syn : synonyms) {
    out.push_back(AgreeArticle(sentence.WithToken(k, syn), k));
  }
  return out;
}

std::vector<std::string> FilterSynonymsComplexity(
    std::span<const std::string> synonyms,
    const ComplexityClassifier& classifier, const NGramModel& model,
    const Thesaurus& thesaurus) {
  std::vector<std::string> out;
  for (const std::string& syn : synonyms) {
    const FeatureVector x = ExtractFeatures(syn, model, thesaurus);
    if (classifier.Predict(x).label == Complexity::kSimple) out.push_back(syn);
  }
  return out;
}

CosineFilterResult FilterSynonymsCosine(std::string_view word,
                                        std::span<const std::string> synonyms,
                                        const WordVectorStore& store) {
  CosineFilterResult result;
  const EmbeddingVector* target = store.Find(word);
  if (target == nullptr) {
    result.applied = false;
    result.kept.assign(synonyms.begin(), synonyms.end());
    return result;
  }
  for (const std::string& syn : synonyms) {
    const EmbeddingVector* v = store.Find(syn);
    if (v == nullptr) continue;
    try {
      result.cosines.emplace_back(syn, Cosine(*target, *v));
    } catch (const UndefinedSimilarityError&) {
      // A zero vector carries no similarity signal; treat it as absent.
    }
  }
  if (result.cosines.empty()) return result;
  double mean = 0;
  for (const auto& [syn, cos] : result.cosines) mean += cos;
  mean /= static_cast<double>(result.cosines.size());
  for (const auto& [syn, cos] : result.cosines) {
    if (cos > mean) result.kept.push_back(syn);
  }
  if (result.kept.empty()) {
    auto best = result.cosines.begin();
    for (auto it = result.cosines.begin(); it != result.cosines.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    result.kept.push_back(best->first);
  }
  return result;
}

Simplifier::Simplifier(PipelineResources resources) : r_(resources) {
  if (r_.model == nullptr || r_.classifier == nullptr ||
      r_.thesaurus == nullptr || r_.morphology == nullptr) {
    throw ValidationError(
        "simplifier needs a language model, classifier, thesaurus and "
        "morphology");
  }
}

ComplexityLabel Simplifier::PredictComplexity(std::string_view word) const {
  return r_.classifier->Predict(ExtractFeatures(word, *r_.model, *r_.thesaurus));
}

SimplificationResult Simplifier::Simplify(
    const Sentence& sentence, const SimplificationConfig& config) const {
  ValidatePhi(config.phi);
  if (config.mode == Mode::kWordEmbedding && r_.word_vectors == nullptr) {
    throw ValidationError("word-embedding mode needs word vectors");
  }
  if (config.mode == Mode::kTransformer && r_.embedder == nullptr) {
    throw ValidationError("transformer mode needs a sentence embedder");
  }
  SimplificationResult result{sentence, {}, {}};
  Sentence& working = result.output;
  for (size_t k = 0; k < working.size(); ++k) {
    const std::string word = working[k];
    if (!IsReplaceable(word)) continue;
    const ComplexityLabel label = PredictComplexity(word);
    if (label.label != Complexity::kComplex) continue;
    ReplacementTrace& trace = result.traces.emplace_back();
    trace.position = k;
    trace.original = word;
    trace.probabilities = label.probabilities;
    ProcessPosition(working, k, config, trace);
  }
  result.pp_score = PpScore(*r_.model, working, config.phi);
  return result;
}

void Simplifier::ProcessPosition(Sentence& working, size_t k,
                                 const SimplificationConfig& config,
                                 ReplacementTrace& trace) const {
  const std::string& word = trace.original;
  trace.tag = r_.morphology->Tag(working)[k];
  trace.lemma = r_.morphology->Lemmatize(word, trace.tag);
  trace.inflection = r_.morphology->InferInflection(word, trace.tag);
  if (!trace.inflection.has_value()) return;  // closed-class word

  std::vector<std::string> lemmas;
  try {
    lemmas = r_.thesaurus->Lookup(trace.lemma, trace.tag);
  } catch (const ProviderError& e) {
    trace.error = e.what();
    return;
  }
  for (const std::string& syn : lemmas) {
    std::string surface = r_.morphology->Inflect(syn, *trace.inflection);
    if (surface.empty() || surface == word || HasSpace(surface)) continue;
    if (std::find(trace.fetched.begin(), trace.fetched.end(), surface) ==
        trace.fetched.end()) {
      trace.fetched.push_back(std::move(surface));
    }
  }
  trace.simple_synonyms = FilterSynonymsComplexity(
      trace.fetched, *r_.classifier, *r_.model, *r_.thesaurus);

  if (config.mode == Mode::kWordEmbedding) {
    CosineFilterResult filtered =
        FilterSynonymsCosine(word, trace.simple_synonyms, *r_.word_vectors);
    trace.survivors = std::move(filtered.kept);
    trace.cosine_filter_skipped = !filtered.applied;
  } else {
    trace.survivors = trace.simple_synonyms;
  }
  if (trace.survivors.empty()) return;

  const std::vector<Sentence> candidates =
      GenerateCandidates(working, k, trace.survivors);
  size_t winner = 0;
  if (config.mode == Mode::kWordEmbedding) {
    const PerplexityRanking ranking =
        RankByPerplexity(*r_.model, candidates, config.phi);
    for (size_t i = 0; i < candidates.size(); ++i) {
      trace.candidates.push_back({trace.survivors[i], candidates[i].ToString(),
                                  ranking.scores[i].combined});
    }
    winner = ranking.index;
    trace.chosen_pp = ranking.score;
  } else {
    CosineRanking ranking;
    try {
      ranking = RankByCosine(working, candidates, *r_.embedder);
    } catch (const Error& e) {
      // Provider down, cache miss or an unusable vector: leave the word.
      trace.error = e.what();
      return;
    }
    for (size_t i = 0; i < candidates.size(); ++i) {
      trace.candidates.push_back({trace.survivors[i], candidates[i].ToString(),
                                  ranking.cosines[i]});
    }
    winner = ranking.index;
    trace.chosen_pp = PpScore(*r_.model, candidates[winner], config.phi);
  }
  trace.chosen = trace.survivors[winner];
  working = candidates[winner];
}

}  // namespace simplex
