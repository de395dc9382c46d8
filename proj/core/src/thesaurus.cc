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

#include "simplex/thesaurus.h"

#include <algorithm>

#include <fmt/format.h>

#include "httplib.h"
#include "json.hpp"
#include "simplex/errors.h"
#include "string_util.h"

namespace simplex {
namespace {

void AppendUnique(std::vector<std::string>& list, std::string word,
                  std::string_view lemma) {
  if (word.empty() || word == lemma) return;
  if (std::find(list.begin(), list.end(), word) != list.end()) return;
  list.push_back(std::move(word));
}

}  // namespace

OfflineThesaurus OfflineThesaurus::Parse(std::string_view text) {
  OfflineThesaurus store;
  int line_number = 0;
  for (std::string_view line : internal::Split(text, '\n')) {
    ++line_number;
    line = internal::StripTrailing(line);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](std::string_view what) {
      throw ParseError(fmt::format("thesaurus line {}: {}", line_number, what),
                       line_number);
    };
    std::vector<std::string_view> fields = internal::Split(line, '\t');
    if (fields.size() != 4) fail("expected 4 tab-separated fields");
    const std::string lemma = internal::AsciiLower(internal::Strip(fields[0]));
    if (lemma.empty()) fail("empty lemma");
    std::optional<PosTag> pos = ParsePosTag(fields[1]);
    if (!pos || *pos == PosTag::kOther) fail("unknown pos");
    std::optional<int> senses = internal::ParseNumber<int>(fields[2]);
    if (!senses || *senses < 0) fail("bad sense count");

    auto [it, inserted] = store.entries_.try_emplace(Key{lemma, *pos});
    ThesaurusEntry& entry = it->second;
    if (inserted) {
      entry.lemma = lemma;
      entry.pos = *pos;
    }
    entry.sense_count += *senses;
    for (std::string_view syn : internal::Split(fields[3], ',')) {
      AppendUnique(entry.synonyms, internal::AsciiLower(internal::Strip(syn)),
                   lemma);
    }
    store.senses_[lemma] += *senses;
  }
  return store;
}

OfflineThesaurus OfflineThesaurus::Load(const std::string& path) {
  return Parse(internal::ReadFile(path));
}

std::vector<std::string> OfflineThesaurus::Lookup(std::string_view lemma,
                                                  PosTag pos) const {
  auto it = entries_.find(Key{std::string(lemma), pos});
  if (it == entries_.end()) return {};
  return it->second.synonyms;
}

int OfflineThesaurus::SynsetSize(std::string_view word) const {
  auto it = senses_.find(word);
  return it == senses_.end() ? 0 : it->second;
}

bool OfflineThesaurus::Contains(std::string_view lemma, PosTag pos) const {
  return entries_.contains(Key{std::string(lemma), pos});
}

std::vector<ThesaurusEntry> OfflineThesaurus::Entries() const {
  std::vector<ThesaurusEntry> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(entry);
  return out;
}

RemoteThesaurus::RemoteThesaurus(std::string base_url,
                                 std::chrono::milliseconds timeout)
    : base_url_(std::move(base_url)), timeout_(timeout) {}

RemoteThesaurus::Response RemoteThesaurus::Fetch(std::string_view lemma,
                                                 PosTag pos) const {
  auto key = std::make_pair(std::string(lemma), pos);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  httplib::Client client(base_url_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  httplib::Params params{{"lemma", std::string(lemma)},
                         {"pos", std::string(PosTagName(pos))}};
  httplib::Result result = client.Get("/synonyms", params, httplib::Headers{});
  if (!result) {
    throw ProviderError(fmt::format("thesaurus endpoint {}: {}", base_url_,
                                    httplib::to_string(result.error())));
  }
  if (result->status != 200) {
    throw ProviderError(fmt::format("thesaurus endpoint {} returned {}",
                                    base_url_, result->status));
  }
  Response response;
  try {
    const nlohmann::json body = nlohmann::json::parse(result->body);
    response.sense_count = body.value("sense_count", 0);
    for (const auto& syn : body.at("synonyms")) {
      AppendUnique(response.synonyms,
                   internal::AsciiLower(syn.get<std::string>()), lemma);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(
        fmt::format("malformed thesaurus response: {}", e.what()));
  }
  std::lock_guard<std::mutex> lock(mu_);
  // A concurrent fetch of the same key may have landed first; keep it.
  return cache_.try_emplace(std::move(key), std::move(response)).first->second;
}

std::vector<std::string> RemoteThesaurus::Lookup(std::string_view lemma,
                                                 PosTag pos) const {
  return Fetch(lemma, pos).synonyms;
}

int RemoteThesaurus::SynsetSize(std::string_view word) const {
  int total = 0;
  for (PosTag pos : kOpenClassTags) {
    try {
      total += Fetch(word, pos).sense_count;
    } catch (const ProviderError&) {
    }
  }
  return total;
}

}  // namespace simplex
