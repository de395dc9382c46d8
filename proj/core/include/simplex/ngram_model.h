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

#ifndef SIMPLEX_NGRAM_MODEL_H_
#define SIMPLEX_NGRAM_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <unordered_map>

#include "simplex/sentence.h"
#include "simplex/string_map.h"

namespace simplex {

struct WordStats {
  int64_t occurrences = 0;     // f_w
  int64_t sentence_count = 0;  // number of distinct sentences containing w

  bool operator==(const WordStats&) const = default;
};

// Unigram and bigram counts over a tokenized corpus. Bigrams never cross a
// sentence boundary. Immutable after construction, so safe to share across
// threads.
class NGramModel {
 public:
  static constexpr std::string_view kMagic = "SIMPLEX-LM1";

  // Throws ValidationError for an empty corpus.
  static NGramModel Build(std::span<const Sentence> sentences);

  // f_w / |V|, or Floor() for out-of-vocabulary words. Not a distribution:
  // the values do not sum to one over the vocabulary.
  double UnigramProb(std::string_view word) const;

  // f_{v,w} / f_v when the bigram was observed, otherwise Floor().
  double BigramProb(std::string_view prev, std::string_view word) const;

  // 1 / (|V| * total_tokens): strictly below any observed probability.
  double Floor() const { return floor_; }

  WordStats Stats(std::string_view word) const;
  int64_t BigramCount(std::string_view prev, std::string_view word) const;

  bool Contains(std::string_view word) const { return index_.contains(word); }
  size_t vocab_size() const { return vocab_.size(); }
  int64_t total_tokens() const { return total_tokens_; }
  size_t distinct_bigrams() const { return bigrams_.size(); }

  // Sorted vocabulary.
  const std::vector<std::string>& vocabulary() const { return vocab_; }

  // Observed continuations of `prev` with their counts, sorted by word.
  std::vector<std::pair<std::string, int64_t>> Successors(
      std::string_view prev) const;

  // Text cache format: magic line, header counts, one "word\tf\ts" line per
  // vocabulary entry in sorted order, then "i\tj\tcount" bigram lines sorted
  // by id pair. Serialize(Deserialize(x)) == x byte for byte.
  std::string Serialize() const;
  // Throws ParseError on malformed input.
  static NGramModel Deserialize(std::string_view data);

  void Save(const std::string& path) const;
  static NGramModel Load(const std::string& path);

 private:
  NGramModel() = default;

  static uint64_t PairKey(uint32_t prev, uint32_t word) {
    return (static_cast<uint64_t>(prev) << 32) | word;
  }
  void Finalize();

  std::vector<std::string> vocab_;
  StringMap<uint32_t> index_;
  std::vector<int64_t> unigram_;
  std::vector<int64_t> sentence_;
  std::unordered_map<uint64_t, int64_t> bigrams_;
  int64_t total_tokens_ = 0;
  double floor_ = 0.0;
};

}  // namespace simplex

#endif  // SIMPLEX_NGRAM_MODEL_H_
