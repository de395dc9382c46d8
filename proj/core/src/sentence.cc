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

#include "simplex/sentence.h"

#include <fstream>
#include <utility>

#include <fmt/format.h>

#include "simplex/errors.h"
#include "string_util.h"

namespace simplex {

Sentence Sentence::FromTokens(std::vector<std::string> tokens) {
  if (tokens.empty()) throw ValidationError("sentence has no tokens");
  for (const std::string& token : tokens) {
    if (token.empty()) throw ValidationError("sentence contains an empty token");
    for (char c : token) {
      if (internal::IsSpace(c)) {
        throw ValidationError(
            fmt::format("token contains whitespace: '{}'", token));
      }
    }
  }
  return Sentence(std::move(tokens));
}

Sentence Sentence::Parse(std::string_view text) {
  std::vector<std::string> tokens;
  for (std::string_view piece : internal::SplitWhitespace(text)) {
    tokens.push_back(internal::AsciiLower(piece));
  }
  return FromTokens(std::move(tokens));
}

std::string Sentence::ToString() const {
  return fmt::format("{}", fmt::join(tokens_, " "));
}

Sentence Sentence::WithToken(size_t k, std::string token) const {
  std::vector<std::string> copy = tokens_;
  copy.at(k) = std::move(token);
  return FromTokens(std::move(copy));
}

namespace {

std::vector<Sentence> ReadLines(const std::string& path, bool keep_blank) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<Sentence> sentences;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (internal::Strip(line).empty()) {
      if (!keep_blank) continue;
      throw ParseError(fmt::format("{}:{}: blank line", path, line_number),
                       line_number);
    }
    sentences.push_back(Sentence::Parse(line));
  }
  return sentences;
}

}  // namespace

std::vector<Sentence> ReadSentences(const std::string& path) {
  return ReadLines(path, /*keep_blank=*/false);
}

std::vector<Sentence> ReadAlignedSentences(const std::string& path) {
  return ReadLines(path, /*keep_blank=*/true);
}

}  // namespace simplex
