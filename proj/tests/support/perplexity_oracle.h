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

#ifndef SIMPLEX_TESTS_SUPPORT_PERPLEXITY_ORACLE_H_
#define SIMPLEX_TESTS_SUPPORT_PERPLEXITY_ORACLE_H_

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace simplex::testing {

// Straight-from-the-definition perplexities over a raw token-list corpus,
// sharing no code with NGramModel: counts by tally, scores by direct product
// (Π p)^(-1/n) in long double.
class DirectPerplexity {
 public:
  explicit DirectPerplexity(const std::vector<std::vector<std::string>>& corpus) {
    int64_t tokens = 0;
    for (const auto& s : corpus) {
      for (size_t i = 0; i < s.size(); ++i) {
        ++unigram_[s[i]];
        ++tokens;
        if (i > 0) ++bigram_[{s[i - 1], s[i]}];
      }
    }
    vocab_ = static_cast<long double>(unigram_.size());
    floor_ = 1.0L / (vocab_ * static_cast<long double>(tokens));
  }

  long double P(const std::string& w) const {
    auto it = unigram_.find(w);
    return it == unigram_.end() ? floor_ : it->second / vocab_;
  }

  long double P(const std::string& v, const std::string& w) const {
    auto it = bigram_.find({v, w});
    if (it == bigram_.end()) return floor_;
    return static_cast<long double>(it->second) / unigram_.at(v);
  }

  long double Pp1(const std::vector<std::string>& s) const {
    long double product = 1;
    for (const auto& w : s) product *= P(w);
    return std::pow(product, -1.0L / s.size());
  }

  long double Pp2(const std::vector<std::string>& s) const {
    long double product = P(s[0]);
    for (size_t i = 1; i < s.size(); ++i) product *= P(s[i - 1], s[i]);
    return std::pow(product, -1.0L / s.size());
  }

 private:
  std::map<std::string, int64_t> unigram_;
  std::map<std::pair<std::string, std::string>, int64_t> bigram_;
  long double vocab_ = 0;
  long double floor_ = 0;
};

// Random corpus over at most `vocab` words "w0".."w{vocab-1}".
inline std::vector<std::vector<std::string>> RandomCorpus(std::mt19937_64& rng,
                                                          int vocab,
                                                          int max_sentences,
                                                          int max_len) {
  std::uniform_int_distribution<int> word(0, vocab - 1);
  std::uniform_int_distribution<int> count(1, max_sentences);
  std::uniform_int_distribution<int> len(1, max_len);
  std::vector<std::vector<std::string>> out(count(rng));
  for (auto& s : out) {
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back("w" + std::to_string(word(rng)));
  }
  return out;
}

}  // namespace simplex::testing

#endif  // SIMPLEX_TESTS_SUPPORT_PERPLEXITY_ORACLE_H_
