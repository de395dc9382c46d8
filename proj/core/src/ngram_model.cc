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

#include "simplex/ngram_model.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <utility>

#include <fmt/format.h>

#include "simplex/errors.h"
#include "string_util.h"

namespace simplex {

NGramModel NGramModel::Build(std::span<const Sentence> sentences) {
  if (sentences.empty()) {
    throw ValidationError("cannot build a model from an empty corpus");
  }
  // Sorted vocabulary first so ids are independent of corpus order.
  std::map<std::string, std::pair<int64_t, int64_t>, std::less<>> tally;
  for (const Sentence& sentence : sentences) {
    StringSet seen;
    for (const std::string& token : sentence.tokens()) {
      auto& [count, in_sentences] = tally[token];
      ++count;
      if (seen.insert(token).second) ++in_sentences;
    }
  }

  NGramModel model;
  model.vocab_.reserve(tally.size());
  for (auto& [word, counts] : tally) {
    model.index_.emplace(word, static_cast<uint32_t>(model.vocab_.size()));
    model.vocab_.push_back(word);
    model.unigram_.push_back(counts.first);
    model.sentence_.push_back(counts.second);
    model.total_tokens_ += counts.first;
  }
  for (const Sentence& sentence : sentences) {
    for (size_t i = 1; i < sentence.size(); ++i) {
      const uint32_t prev = model.index_.find(sentence[i - 1])->second;
      const uint32_t word = model.index_.find(sentence[i])->second;
      ++model.bigrams_[PairKey(prev, word)];
    }
  }
  model.Finalize();
  return model;
}

void NGramModel::Finalize() {
  floor_ = 1.0 / (static_cast<double>(vocab_.size()) *
                  static_cast<double>(total_tokens_));
}

double NGramModel::UnigramProb(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return floor_;
  return static_cast<double>(unigram_[it->second]) /
         static_cast<double>(vocab_.size());
}

double NGramModel::BigramProb(std::string_view prev,
                              std::string_view word) const {
  const int64_t count = BigramCount(prev, word);
  if (count == 0) return floor_;
  return static_cast<double>(count) /
         static_cast<double>(unigram_[index_.find(prev)->second]);
}

WordStats NGramModel::Stats(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return {};
  return {unigram_[it->second], sentence_[it->second]};
}

int64_t NGramModel::BigramCount(std::string_view prev,
                                std::string_view word) const {
  auto p = index_.find(prev);
  auto w = index_.find(word);
  if (p == index_.end() || w == index_.end()) return 0;
  auto it = bigrams_.find(PairKey(p->second, w->second));
  return it == bigrams_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, int64_t>> NGramModel::Successors(
    std::string_view prev) const {
  std::vector<std::pair<std::string, int64_t>> out;
  auto p = index_.find(prev);
  if (p == index_.end()) return out;
  for (const auto& [key, count] : bigrams_) {
    if (static_cast<uint32_t>(key >> 32) == p->second) {
      out.emplace_back(vocab_[static_cast<uint32_t>(key)], count);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string NGramModel::Serialize() const {
  std::vector<std::pair<uint64_t, int64_t>> pairs(bigrams_.begin(),
                                                  bigrams_.end());
  std::sort(pairs.begin(), pairs.end());
  std::string out = fmt::format(
      "{}\nvocab_size\t{}\ntotal_tokens\t{}\nbigrams\t{}\n", kMagic,
      vocab_.size(), total_tokens_, pairs.size());
  for (size_t i = 0; i < vocab_.size(); ++i) {
    fmt::format_to(std::back_inserter(out), "{}\t{}\t{}\n", vocab_[i],
                   unigram_[i], sentence_[i]);
  }
  for (const auto& [key, count] : pairs) {
    fmt::format_to(std::back_inserter(out), "{}\t{}\t{}\n", key >> 32,
                   key & 0xffffffffu, count);
  }
  return out;
}

namespace {

[[noreturn]] void Corrupt(int line, std::string_view what) {
  throw ParseError(fmt::format("language model cache line {}: {}", line, what),
                   line);
}

int64_t Header(std::string_view line, std::string_view key, int line_no) {
  std::vector<std::string_view> parts = internal::Split(line, '\t');
  std::optional<int64_t> value;
  if (parts.size() == 2 && parts[0] == key) {
    value = internal::ParseNumber<int64_t>(parts[1]);
  }
  if (!value || *value < 0) Corrupt(line_no, fmt::format("bad {}", key));
  return *value;
}

}  // namespace

NGramModel NGramModel::Deserialize(std::string_view data) {
  std::vector<std::string_view> lines = internal::Split(data, '\n');
  // A well-formed cache ends with a newline, leaving one trailing empty piece.
  if (lines.back() != "") Corrupt(static_cast<int>(lines.size()), "truncated");
  lines.pop_back();
  if (lines.size() < 4 || lines[0] != kMagic) {
    Corrupt(1, "missing SIMPLEX-LM1 magic");
  }
  const int64_t vocab_size = Header(lines[1], "vocab_size", 2);
  const int64_t total = Header(lines[2], "total_tokens", 3);
  const int64_t bigram_count = Header(lines[3], "bigrams", 4);
  if (vocab_size == 0) Corrupt(2, "empty vocabulary");
  if (static_cast<int64_t>(lines.size()) != 4 + vocab_size + bigram_count) {
    Corrupt(0, "record count does not match header");
  }

  NGramModel model;
  int64_t sum = 0;
  for (int64_t i = 0; i < vocab_size; ++i) {
    const int line_no = static_cast<int>(5 + i);
    std::vector<std::string_view> parts = internal::Split(lines[4 + i], '\t');
    if (parts.size() != 3 || parts[0].empty()) {
      Corrupt(line_no, "bad vocabulary record");
    }
    auto f = internal::ParseNumber<int64_t>(parts[1]);
    auto s = internal::ParseNumber<int64_t>(parts[2]);
    if (!f || !s || *s < 1 || *s > *f) Corrupt(line_no, "bad word counts");
    if (!model.vocab_.empty() && !(model.vocab_.back() < parts[0])) {
      Corrupt(line_no, "vocabulary not strictly sorted");
    }
    model.index_.emplace(std::string(parts[0]),
                         static_cast<uint32_t>(model.vocab_.size()));
    model.vocab_.emplace_back(parts[0]);
    model.unigram_.push_back(*f);
    model.sentence_.push_back(*s);
    sum += *f;
  }
  if (sum != total) Corrupt(3, "total_tokens does not match counts");
  model.total_tokens_ = total;

  for (int64_t i = 0; i < bigram_count; ++i) {
    const int line_no = static_cast<int>(5 + vocab_size + i);
    std::vector<std::string_view> parts =
        internal::Split(lines[4 + vocab_size + i], '\t');
    if (parts.size() != 3) Corrupt(line_no, "bad bigram record");
    auto prev = internal::ParseNumber<uint32_t>(parts[0]);
    auto word = internal::ParseNumber<uint32_t>(parts[1]);
    auto count = internal::ParseNumber<int64_t>(parts[2]);
    if (!prev || !word || !count || *count <= 0 || *prev >= vocab_size ||
        *word >= vocab_size) {
      Corrupt(line_no, "bad bigram record");
    }
    model.bigrams_[PairKey(*prev, *word)] = *count;
  }
  model.Finalize();
  return model;
}

void NGramModel::Save(const std::string& path) const {
  internal::WriteFile(path, Serialize());
}

NGramModel NGramModel::Load(const std::string& path) {
  return Deserialize(internal::ReadFile(path));
}

}  // namespace simplex
