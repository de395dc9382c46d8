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

#ifndef SIMPLEX_MORPHOLOGY_H_
#define SIMPLEX_MORPHOLOGY_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplex/pos.h"
#include "simplex/sentence.h"
#include "simplex/string_map.h"

namespace simplex {

class OfflineThesaurus;

// Surface form a base word is inflected to. Verb, noun and degree
// (adjective/adverb) variants share one enum; InflectionAppliesTo() says
// which POS each one belongs to.
enum class Inflection {
  kBase,
  kThirdSingular,
  kPresentParticiple,
  kPastParticiple,
  kPast,
  kSingular,
  kPlural,
  kPositive,
  kComparative,
  kSuperlative,
};

bool InflectionAppliesTo(Inflection inflection, PosTag tag);
std::string_view InflectionName(Inflection inflection);
std::optional<Inflection> ParseInflection(std::string_view name);

// Rule-plus-exception-table English morphology. Tables are read from a data
// directory holding:
//
//   tag_lexicon.tsv        word<TAB>tag[,tag...]   (first tag is the default)
//   irregular_verbs.tsv    lemma past participle third present_participle
//   irregular_nouns.tsv    singular plural
//   irregular_degrees.tsv  lemma pos comparative superlative
//   doubling.tsv           multi-syllable lemmas that double a final consonant
//
// Lemmatization is generate-and-test: a candidate base form is accepted only
// if inflecting it reproduces the surface word, and known base forms win
// over unknown ones. That keeps Lemmatize, InferInflection and Inflect
// mutually consistent.
class Morphology {
 public:
  // Throws IoError / ParseError.
  static Morphology Load(const std::string& data_dir);

  // Registers every thesaurus lemma and synonym as a known base form for its
  // POS. Call before sharing the object across threads.
  void AddBaseForms(const OfflineThesaurus& thesaurus);
  void AddBaseForm(std::string_view word, PosTag tag);

  // One tag per token: lexicon first, then inflected forms of known lemmas,
  // then suffix heuristics. Ambiguity is resolved from the previous token.
  std::vector<PosTag> Tag(const Sentence& sentence) const;

  std::string Lemmatize(std::string_view word, PosTag tag) const;

  // nullopt for PosTag::kOther: such words are never re-inflected.
  std::optional<Inflection> InferInflection(std::string_view word,
                                            PosTag tag) const;

  std::string Inflect(std::string_view lemma, Inflection inflection) const;

  bool IsKnown(std::string_view word, PosTag tag) const;

 private:
  struct VerbForms {
    std::string past, past_participle, third, present_participle;
  };
  struct DegreeForms {
    std::string comparative, superlative;
  };

  Morphology() = default;

  bool ShouldDouble(std::string_view lemma) const;
  std::string RegularForm(std::string_view lemma, Inflection inflection) const;
  std::vector<std::string> BaseCandidates(std::string_view word,
                                          PosTag tag) const;
  bool Reproduces(std::string_view lemma, std::string_view word,
                  PosTag tag) const;
  std::optional<std::string> IrregularLemma(std::string_view word,
                                            PosTag tag) const;
  std::vector<PosTag> CandidateTags(std::string_view word) const;

  StringMap<std::vector<PosTag>> lexicon_;
  // Known base forms per POS, indexed by static_cast<int>(PosTag).
  std::array<StringSet, 5> known_;
  StringMap<VerbForms> verbs_;
  StringMap<std::string> verb_surface_;
  StringMap<std::string> plural_of_;
  StringMap<std::string> singular_of_;
  // Indexed by 0 = adjective, 1 = adverb.
  std::array<StringMap<DegreeForms>, 2> degrees_;
  std::array<StringMap<std::string>, 2> degree_surface_;
  StringSet doubling_;
};

// If the token before position `k` is "a" or "an", rewrites it to agree with
// the token at `k` (vowel letter -> "an"). No other position changes.
Sentence AgreeArticle(const Sentence& sentence, size_t k);

}  // namespace simplex

#endif  // SIMPLEX_MORPHOLOGY_H_
