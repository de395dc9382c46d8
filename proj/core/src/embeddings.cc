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

#include "simplex/embeddings.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "httplib.h"
#include "json.hpp"
#include "simplex/errors.h"
#include "string_util.h"

namespace simplex {
namespace {

uint64_t Fnv1a(std::string_view a, std::string_view b) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(a);
  mix(std::string_view("\0", 1));
  mix(b);
  return h;
}

uint64_t SplitMix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::optional<EmbeddingVector> ParseFloats(
    std::span<const std::string_view> fields) {
  EmbeddingVector v;
  v.reserve(fields.size());
  for (std::string_view f : fields) {
    std::optional<double> x = internal::ParseNumber<double>(f);
    if (!x || !std::isfinite(*x)) return std::nullopt;
    v.push_back(*x);
  }
  return v;
}

}  // namespace

double Cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError(
        fmt::format("cosine of vectors with dims {} and {}", a.size(), b.size()));
  }
  double dot = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) {
    throw UndefinedSimilarityError("cosine with a zero-norm vector");
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

WordVectorStore WordVectorStore::Parse(std::string_view text) {
  WordVectorStore store;
  int line_number = 0;
  bool first = true;
  for (std::string_view line : internal::Split(text, '\n')) {
    ++line_number;
    std::vector<std::string_view> fields = internal::SplitWhitespace(line);
    if (fields.empty()) continue;
    if (first) {
      first = false;
      if (fields.size() == 2 && internal::ParseNumber<int64_t>(fields[0]) &&
          internal::ParseNumber<int64_t>(fields[1])) {
        continue;  // "count dim" header
      }
    }
    if (fields.size() < 2) {
      throw ParseError(
          fmt::format("vectors line {}: word without components", line_number),
          line_number);
    }
    std::optional<EmbeddingVector> v =
        ParseFloats(std::span(fields).subspan(1));
    if (!v) {
      throw ParseError(
          fmt::format("vectors line {}: malformed float", line_number),
          line_number);
    }
    if (store.dim_ == 0) store.dim_ = v->size();
    if (v->size() != store.dim_) {
      throw ParseError(fmt::format("vectors line {}: dim {} != {}", line_number,
                                   v->size(), store.dim_),
                       line_number);
    }
    store.vectors_.insert_or_assign(std::string(fields[0]), std::move(*v));
  }
  if (store.vectors_.empty()) throw ParseError("no word vectors found");
  return store;
}

WordVectorStore WordVectorStore::Load(const std::string& path) {
  try {
    return Parse(internal::ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()), e.line());
  }
}

const EmbeddingVector* WordVectorStore::Find(std::string_view word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

std::vector<EmbeddingVector> SentenceEmbedder::EmbedBatch(
    std::span<const Sentence> sentences) const {
  std::vector<EmbeddingVector> out;
  out.reserve(sentences.size());
  for (const Sentence& s : sentences) out.push_back(Embed(s));
  return out;
}

MockSentenceEmbedder::MockSentenceEmbedder(std::string model, size_t dim)
    : model_(std::move(model)), dim_(dim) {
  if (dim_ == 0) throw ValidationError("mock embedder needs dim > 0");
}

EmbeddingVector MockSentenceEmbedder::TokenVector(std::string_view token) const {
  uint64_t state = Fnv1a(model_, token);
  EmbeddingVector v(dim_);
  double norm = 0;
  do {
    norm = 0;
    for (double& x : v) {
      // 53 random bits -> [-1, 1).
      x = static_cast<double>(SplitMix64(state) >> 11) * 0x1.0p-52 - 1.0;
      norm += x * x;
    }
  } while (norm == 0);
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

EmbeddingVector MockSentenceEmbedder::Embed(const Sentence& sentence) const {
  EmbeddingVector sum(dim_, 0.0);
  for (const std::string& token : sentence.tokens()) {
    const EmbeddingVector t = TokenVector(token);
    for (size_t i = 0; i < dim_; ++i) sum[i] += t[i];
  }
  for (double& x : sum) x /= static_cast<double>(sentence.size());
  return sum;
}

CachedSentenceEmbedder CachedSentenceEmbedder::Parse(std::string_view text,
                                                     std::string model) {
  CachedSentenceEmbedder cache(std::move(model));
  std::vector<std::string_view> lines = internal::Split(text, '\n');
  if (lines.empty() || internal::StripTrailing(lines[0]) != kMagic) {
    throw ParseError("missing SIMPLEX-EMB1 header", 1);
  }
  std::optional<size_t> dim;
  if (lines.size() > 1) {
    std::vector<std::string_view> f =
        internal::Split(internal::StripTrailing(lines[1]), '\t');
    if (f.size() == 2 && f[0] == "dim") dim = internal::ParseNumber<size_t>(f[1]);
  }
  if (!dim || *dim == 0) throw ParseError("expected dim<TAB>d", 2);
  cache.dim_ = *dim;
  for (size_t i = 2; i < lines.size(); ++i) {
    const int line_number = static_cast<int>(i + 1);
    std::string_view line = internal::StripTrailing(lines[i]);
    if (line.empty()) continue;
    std::vector<std::string_view> f = internal::Split(line, '\t');
    if (f.size() != 3) {
      throw ParseError(fmt::format("embedding cache line {}: expected "
                                   "model<TAB>sentence<TAB>vector",
                                   line_number),
                       line_number);
    }
    std::vector<std::string_view> parts = internal::SplitWhitespace(f[2]);
    std::optional<EmbeddingVector> v = ParseFloats(parts);
    if (!v || v->size() != cache.dim_) {
      throw ParseError(
          fmt::format("embedding cache line {}: bad vector", line_number),
          line_number);
    }
    cache.rows_.insert_or_assign({std::string(f[0]), std::string(f[1])},
                                 std::move(*v));
  }
  return cache;
}

CachedSentenceEmbedder CachedSentenceEmbedder::Load(const std::string& path,
                                                    std::string model) {
  return Parse(internal::ReadFile(path), std::move(model));
}

EmbeddingVector CachedSentenceEmbedder::Embed(const Sentence& sentence) const {
  auto it = rows_.find(std::make_pair(model_, sentence.ToString()));
  if (it == rows_.end()) {
    throw MissingEmbeddingError(fmt::format(
        "no cached embedding for model '{}': {}", model_, sentence.ToString()));
  }
  return it->second;
}

void CachedSentenceEmbedder::Add(std::string_view model,
                                 std::string_view sentence,
                                 EmbeddingVector vector) {
  if (dim_ == 0) dim_ = vector.size();
  if (vector.size() != dim_ || dim_ == 0) {
    throw ValidationError("embedding dimension mismatch");
  }
  rows_.insert_or_assign({std::string(model), std::string(sentence)},
                         std::move(vector));
}

std::string CachedSentenceEmbedder::Serialize() const {
  std::string out = fmt::format("{}\ndim\t{}\n", kMagic, dim_);
  for (const auto& [key, v] : rows_) {
    out += fmt::format("{}\t{}\t{}\n", key.first, key.second,
                       fmt::join(v, " "));
  }
  return out;
}

RemoteSentenceEmbedder::RemoteSentenceEmbedder(
    std::string base_url, std::string model, std::chrono::milliseconds timeout)
    : base_url_(std::move(base_url)),
      model_(std::move(model)),
      timeout_(timeout) {}

EmbeddingVector RemoteSentenceEmbedder::Embed(const Sentence& sentence) const {
  return EmbedBatch(std::span(&sentence, 1)).front();
}

std::vector<EmbeddingVector> RemoteSentenceEmbedder::EmbedBatch(
    std::span<const Sentence> sentences) const {
  std::vector<EmbeddingVector> out(sentences.size());
  std::vector<std::string> texts(sentences.size());
  std::vector<size_t> missing;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (size_t i = 0; i < sentences.size(); ++i) {
      texts[i] = sentences[i].ToString();
      if (auto it = cache_.find(texts[i]); it != cache_.end()) {
        out[i] = it->second;
      } else {
        missing.push_back(i);
      }
    }
  }
  if (missing.empty()) return out;

  nlohmann::json request = {{"model", model_},
                            {"sentences", nlohmann::json::array()}};
  for (size_t i : missing) request["sentences"].push_back(texts[i]);

  httplib::Client client(base_url_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  httplib::Result result =
      client.Post("/embed", request.dump(), "application/json");
  if (!result) {
    throw ProviderError(fmt::format("embedding endpoint {}: {}", base_url_,
                                    httplib::to_string(result.error())));
  }
  if (result->status != 200) {
    throw ProviderError(fmt::format("embedding endpoint {} returned {}",
                                    base_url_, result->status));
  }
  std::vector<EmbeddingVector> fetched;
  try {
    const nlohmann::json body = nlohmann::json::parse(result->body);
    fetched = body.at("embeddings").get<std::vector<EmbeddingVector>>();
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(
        fmt::format("malformed embedding response: {}", e.what()));
  }
  if (fetched.size() != missing.size()) {
    throw ProviderError(fmt::format("embedding endpoint returned {} vectors "
                                    "for {} sentences",
                                    fetched.size(), missing.size()));
  }
  for (const EmbeddingVector& v : fetched) {
    if (v.empty() || v.size() != fetched.front().size() ||
        !std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); })) {
      throw ProviderError("embedding endpoint returned an invalid vector");
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (size_t j = 0; j < missing.size(); ++j) {
    const size_t i = missing[j];
    // Keep whichever vector landed first so answers never change mid-session.
    out[i] = cache_.try_emplace(texts[i], std::move(fetched[j])).first->second;
  }
  return out;
}

std::unique_ptr<SentenceEmbedder> MakeSentenceEmbedder(
    std::string_view endpoint, const std::string& model) {
  if (endpoint == "mock:" || endpoint == "mock") {
    return std::make_unique<MockSentenceEmbedder>(model);
  }
  if (endpoint.starts_with("cache:")) {
    return std::make_unique<CachedSentenceEmbedder>(CachedSentenceEmbedder::Load(
        std::string(endpoint.substr(6)), model));
  }
  if (endpoint.starts_with("http://") || endpoint.starts_with("https://")) {
    return std::make_unique<RemoteSentenceEmbedder>(std::string(endpoint),
                                                    model);
  }
  throw ValidationError(fmt::format(
      "embedding endpoint '{}' is not mock:, cache:<path> or an http URL",
      endpoint));
}

}  // namespace simplex
