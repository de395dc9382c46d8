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

#ifndef SIMPLEX_EMBEDDINGS_H_
#define SIMPLEX_EMBEDDINGS_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplex/sentence.h"
#include "simplex/string_map.h"

namespace simplex {

using EmbeddingVector = std::vector<double>;

// Σ a_i b_i / (|a| |b|), clamped to [-1, 1]. Throws ValidationError on a
// dimension mismatch and UndefinedSimilarityError if either norm is zero.
double Cosine(std::span<const double> a, std::span<const double> b);

// Word -> vector table read from the common text format: one
// "word v1 v2 ... vd" line per word, optionally preceded by a "count dim"
// header, which is skipped. Immutable after load.
class WordVectorStore {
 public:
  // Throws ParseError (with line number) on mixed dimensions, bad floats or
  // an empty file; IoError if the file cannot be read.
  static WordVectorStore Parse(std::string_view text);
  static WordVectorStore Load(const std::string& path);

  // nullptr when the word has no vector; never a zero stand-in.
  const EmbeddingVector* Find(std::string_view word) const;

  size_t dim() const { return dim_; }
  size_t size() const { return vectors_.size(); }

 private:
  size_t dim_ = 0;
  StringMap<EmbeddingVector> vectors_;
};

// Maps a whole sentence to one vector. Implementations are deterministic per
// (model, sentence) for the lifetime of the object and safe to call
// concurrently.
class SentenceEmbedder {
 public:
  virtual ~SentenceEmbedder() = default;

  virtual EmbeddingVector Embed(const Sentence& sentence) const = 0;
  // Same order as `sentences`. The default calls Embed() per sentence.
  virtual std::vector<EmbeddingVector> EmbedBatch(
      std::span<const Sentence> sentences) const;
  virtual const std::string& model() const = 0;
};

// Hermetic stand-in for a transformer: every (model, token) pair hashes to a
// fixed pseudo-random unit vector and a sentence is the mean of its token
// vectors, so swapping one word moves the sentence vector by about 1/n.
class MockSentenceEmbedder : public SentenceEmbedder {
 public:
  static constexpr size_t kDefaultDim = 128;

  explicit MockSentenceEmbedder(std::string model, size_t dim = kDefaultDim);

  EmbeddingVector Embed(const Sentence& sentence) const override;
  const std::string& model() const override { return model_; }

  EmbeddingVector TokenVector(std::string_view token) const;

 private:
  std::string model_;
  size_t dim_;
};

// Precomputed vectors keyed by (model id, exact sentence string).
//
//   SIMPLEX-EMB1
//   dim<TAB>d
//   <model><TAB><sentence><TAB>v1 v2 ... vd
//
// Only rows whose model matches `model` are served.
class CachedSentenceEmbedder : public SentenceEmbedder {
 public:
  static constexpr std::string_view kMagic = "SIMPLEX-EMB1";

  explicit CachedSentenceEmbedder(std::string model) : model_(std::move(model)) {}

  // Throws ParseError / IoError.
  static CachedSentenceEmbedder Parse(std::string_view text, std::string model);
  static CachedSentenceEmbedder Load(const std::string& path,
                                     std::string model);

  // Throws MissingEmbeddingError when the sentence is not cached.
  EmbeddingVector Embed(const Sentence& sentence) const override;
  const std::string& model() const override { return model_; }

  // Adds or replaces a row; rows for other models are kept for Serialize().
  void Add(std::string_view model, std::string_view sentence,
           EmbeddingVector vector);
  std::string Serialize() const;

  size_t dim() const { return dim_; }

 private:
  std::string model_;
  size_t dim_ = 0;
  std::map<std::pair<std::string, std::string>, EmbeddingVector, std::less<>>
      rows_;
};

// Out-of-process transformer:
//
//   POST <base>/embed  {"model": m, "sentences": [s1, ...]}
//   -> {"embeddings": [[...], ...]}   (same order)
//
// Responses are cached per sentence. Transport failures, non-200 replies and
// malformed bodies throw ProviderError.
class RemoteSentenceEmbedder : public SentenceEmbedder {
 public:
  RemoteSentenceEmbedder(std::string base_url, std::string model,
                         std::chrono::milliseconds timeout =
                             std::chrono::milliseconds(5000));

  EmbeddingVector Embed(const Sentence& sentence) const override;
  std::vector<EmbeddingVector> EmbedBatch(
      std::span<const Sentence> sentences) const override;
  const std::string& model() const override { return model_; }

 private:
  std::string base_url_;
  std::string model_;
  std::chrono::milliseconds timeout_;
  mutable std::mutex mu_;
  mutable StringMap<EmbeddingVector> cache_;
};

// Builds a provider from an endpoint spec: "mock:" (deterministic mock),
// "cache:<path>" (SIMPLEX-EMB1 file) or an http(s):// base URL.
// Throws ValidationError for an unrecognized spec.
std::unique_ptr<SentenceEmbedder> MakeSentenceEmbedder(
    std::string_view endpoint, const std::string& model);

}  // namespace simplex

#endif  // SIMPLEX_EMBEDDINGS_H_
