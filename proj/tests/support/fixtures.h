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

#ifndef SIMPLEX_TESTS_SUPPORT_FIXTURES_H_
#define SIMPLEX_TESTS_SUPPORT_FIXTURES_H_

#include <memory>
#include <string>
#include <vector>

#include "simplex/classifier.h"
#include "simplex/embeddings.h"
#include "simplex/morphology.h"
#include "simplex/ngram_model.h"
#include "simplex/pipeline.h"
#include "simplex/sentence.h"
#include "simplex/thesaurus.h"

namespace simplex::testing {

inline std::string Fixture(const std::string& name) {
  return std::string(SIMPLEX_FIXTURE_DIR) + "/" + name;
}

// The bundled desk-scale resources: template corpus, hand-built classifier
// (complex iff at least 7 characters and fewer than 20 occurrences), small
// thesaurus, 16-d word vectors and the mock sentence embedder.
struct FixtureResources {
  NGramModel model;
  ComplexityClassifier classifier;
  OfflineThesaurus thesaurus;
  Morphology morphology;
  WordVectorStore vectors;
  MockSentenceEmbedder embedder{"bert"};

  static std::unique_ptr<FixtureResources> Load() {
    const std::vector<Sentence> corpus = ReadSentences(Fixture("corpus.txt"));
    OfflineThesaurus thesaurus = OfflineThesaurus::Load(Fixture("thesaurus.tsv"));
    Morphology morphology =
        Morphology::Load(std::string(SIMPLEX_DATA_DIR) + "/morphology");
    morphology.AddBaseForms(thesaurus);
    return std::unique_ptr<FixtureResources>(new FixtureResources{
        NGramModel::Build(corpus),
        ComplexityClassifier::Load(Fixture("classifier.mlp")),
        std::move(thesaurus), std::move(morphology),
        WordVectorStore::Load(Fixture("vectors.txt"))});
  }

  PipelineResources Resources() const {
    return {&model, &classifier, &thesaurus, &morphology, &vectors, &embedder};
  }
};

inline const FixtureResources& Fixtures() {
  static const FixtureResources* f = FixtureResources::Load().release();
  return *f;
}

inline const char kExample1[] =
    "oregano is an indispensable ingredient in greek cuisine .";
inline const char kExample2[] =
    "it is situated at the coast of the baltic sea , where it encloses the "
    "city of stralsund .";
inline const char kExample3[] =
    "since 2000 , the recipient of the kate greenaway medal has also been "
    "awarded the \xc2\xa3" "5,000 colin mears award .";

}  // namespace simplex::testing

#endif  // SIMPLEX_TESTS_SUPPORT_FIXTURES_H_
