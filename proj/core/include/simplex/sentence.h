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

#ifndef SIMPLEX_SENTENCE_H_
#define SIMPLEX_SENTENCE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace simplex {

// An ordered, non-empty list of tokens. Tokens are non-empty and contain no
// whitespace. Sentences are value types; every edit returns a copy.
class Sentence {
 public:
  // Throws ValidationError if the token invariants do not hold.
  static Sentence FromTokens(std::vector<std::string> tokens);

  // Lowercases (ASCII) and splits on whitespace. Punctuation that is already
  // separated by spaces stays a token of its own. Throws ValidationError for
  // blank text.
  static Sentence Parse(std::string_view text);

  const std::vector<std::string>& tokens() const { return tokens_; }
  size_t size() const { return tokens_.size(); }
  const std::string& operator[](size_t i) const { return tokens_[i]; }

  // Tokens joined by single spaces.
  std::string ToString() const;

  // Copy with position `k` (0-based) replaced.
  Sentence WithToken(size_t k, std::string token) const;

  bool operator==(const Sentence& other) const = default;

 private:
  explicit Sentence(std::vector<std::string> tokens)
      : tokens_(std::move(tokens)) {}

  std::vector<std::string> tokens_;
};

// One sentence per line; blank lines are skipped.
std::vector<Sentence> ReadSentences(const std::string& path);

// One sentence per line, keeping line alignment: a blank line is a
// ParseError naming the file and line.
std::vector<Sentence> ReadAlignedSentences(const std::string& path);

}  // namespace simplex

#endif  // SIMPLEX_SENTENCE_H_
