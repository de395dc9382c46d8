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

#ifndef SIMPLEX_THESAURUS_H_
#define SIMPLEX_THESAURUS_H_

#include <chrono>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplex/pos.h"
#include "simplex/string_map.h"

namespace simplex {

// Source of same-POS synonyms and of the synset-size complexity feature.
class Thesaurus {
 public:
  virtual ~Thesaurus() = default;

  // Synonyms of `lemma` sharing `pos`, in source order, never containing
  // `lemma` itself. Unknown lemmas yield an empty list. Remote providers
  // throw ProviderError on transport failure.
  virtual std::vector<std::string> Lookup(std::string_view lemma,
                                          PosTag pos) const = 0;

  // Number of sense groups recorded for `word` across every POS; 0 if absent.
  virtual int SynsetSize(std::string_view word) const = 0;
};

struct ThesaurusEntry {
  std::string lemma;
  PosTag pos = PosTag::kOther;
  int sense_count = 0;
  std::vector<std::string> synonyms;
};

// Offline thesaurus read from a tab-separated file:
//
//   lemma<TAB>pos<TAB>sense_count<TAB>syn1,syn2,...
//
// Repeated (lemma, pos) records are merged: senses add up and synonym lists
// are concatenated with duplicates removed. Lines starting with '#' are
// comments.
class OfflineThesaurus : public Thesaurus {
 public:
  // Throws ParseError naming the offending line.
  static OfflineThesaurus Parse(std::string_view text);
  static OfflineThesaurus Load(const std::string& path);

  std::vector<std::string> Lookup(std::string_view lemma,
                                  PosTag pos) const override;
  int SynsetSize(std::string_view word) const override;

  // Whether (lemma, pos) has a record. Used as a base-form dictionary by the
  // lemmatizer.
  bool Contains(std::string_view lemma, PosTag pos) const;

  // All entries sorted by (lemma, pos).
  std::vector<ThesaurusEntry> Entries() const;

 private:
  using Key = std::pair<std::string, PosTag>;
  std::map<Key, ThesaurusEntry, std::less<>> entries_;
  StringMap<int> senses_;
};

// Remote provider speaking
//
//   GET <base>/synonyms?lemma=<lemma>&pos=<pos>
//   -> {"lemma": "...", "pos": "...", "sense_count": n, "synonyms": [...]}
//
// Successful responses are cached for the lifetime of the object so repeated
// queries stay deterministic. Transport failures throw ProviderError.
class RemoteThesaurus : public Thesaurus {
 public:
  explicit RemoteThesaurus(std::string base_url,
                           std::chrono::milliseconds timeout =
                               std::chrono::milliseconds(2000));

  std::vector<std::string> Lookup(std::string_view lemma,
                                  PosTag pos) const override;
  // Sums sense counts over the four open-class POS queries; failed queries
  // count as zero.
  int SynsetSize(std::string_view word) const override;

 private:
  struct Response {
    int sense_count = 0;
    std::vector<std::string> synonyms;
  };
  Response Fetch(std::string_view lemma, PosTag pos) const;

  std::string base_url_;
  std::chrono::milliseconds timeout_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::string, PosTag>, Response> cache_;
};

}  // namespace simplex

#endif  // SIMPLEX_THESAURUS_H_
