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

#ifndef SIMPLEX_SERVICE_H_
#define SIMPLEX_SERVICE_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "simplex/classifier.h"
#include "simplex/embeddings.h"
#include "simplex/morphology.h"
#include "simplex/ngram_model.h"
#include "simplex/pipeline.h"
#include "simplex/thesaurus.h"

namespace simplex {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitResourceError = 3;

// Everything needed to stand up a simplifier. Paths may be empty when the
// default mode does not need them.
struct ServiceConfig {
  std::string corpus;      // sentence-per-line text or a SIMPLEX-LM1 file
  std::string lexicon;     // word<TAB>rating; trains the classifier at load
  std::string classifier;  // SIMPLEX-MLP1 file; takes precedence over lexicon
  std::string thesaurus;   // TSV file or http(s):// base URL
  std::string vectors;     // word vectors, word-embedding mode
  std::string embed_endpoint;  // mock:, cache:<path> or http(s)://
  std::string morphology;      // morphology data directory
  std::string model = "bert";  // default sentence-embedding model id
  std::string listen = "127.0.0.1:8080";
  double phi = 0.0;
  Mode mode = Mode::kWordEmbedding;
};

// Reads an environment variable; nullopt when unset.
using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;
EnvLookup SystemEnvironment();

// Overlays SIMPLEX_CORPUS, SIMPLEX_LEXICON, SIMPLEX_CLASSIFIER,
// SIMPLEX_THESAURUS, SIMPLEX_VECTORS, SIMPLEX_EMBED_ENDPOINT,
// SIMPLEX_MORPHOLOGY, SIMPLEX_MODEL, SIMPLEX_LISTEN, SIMPLEX_PHI and
// SIMPLEX_MODE. Throws ValidationError naming the variable on a bad value.
void ApplyEnvironment(const EnvLookup& env, ServiceConfig* config);

// Checks that phi is in range and that the default mode's resources are
// named. Throws ValidationError whose message names the offending flag.
void ValidateConfig(const ServiceConfig& config);

// "host:port" -> (host, port). Throws ValidationError.
std::pair<std::string, int> ParseListenAddress(std::string_view address);

// Per-request knobs; anything unset falls back to the config.
struct SimplifyOptions {
  std::optional<Mode> mode;
  std::optional<double> phi;
  std::optional<std::string> model;
};

// Resources loaded once and shared read-only by every request.
class ServiceResources {
 public:
  // Throws ValidationError for configuration problems and IoError /
  // ParseError for resources that cannot be read.
  static std::unique_ptr<ServiceResources> Load(const ServiceConfig& config);

  const ServiceConfig& config() const { return config_; }
  const NGramModel& model() const { return *model_; }

  // The resolved mode, phi and model id. Throws ValidationError for a bad
  // phi and ProviderError when the mode's resources are not configured.
  SimplificationConfig Resolve(const SimplifyOptions& options) const;
  std::string ResolveModel(const SimplifyOptions& options) const;

  // Sentence embedder for a model id, created on first use. Throws
  // ProviderError when no endpoint is configured or it cannot be opened.
  const SentenceEmbedder& Embedder(const std::string& model) const;

  // Throws ProviderError if the mode's provider cannot serve `sentence`.
  void Probe(const Sentence& sentence, const SimplifyOptions& options) const;

  SimplificationResult Simplify(const Sentence& sentence,
                                const SimplifyOptions& options) const;

 private:
  explicit ServiceResources(ServiceConfig config) : config_(std::move(config)) {}

  ServiceConfig config_;
  std::unique_ptr<NGramModel> model_;
  std::unique_ptr<Thesaurus> thesaurus_;
  std::unique_ptr<Morphology> morphology_;
  std::unique_ptr<ComplexityClassifier> classifier_;
  std::unique_ptr<WordVectorStore> vectors_;
  mutable std::mutex embedders_mu_;
  mutable std::map<std::string, std::unique_ptr<SentenceEmbedder>, std::less<>>
      embedders_;
};

// Text corpus or saved SIMPLEX-LM1 model, decided by the file header.
NGramModel LoadLanguageModel(const std::string& path);

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

// REST front end:
//   POST /simplify {"sentence", "mode"?, "phi"?, "model"?}
//     200 SimplifyResponseJson | 400 {"error"} | 503 {"error"}
//   GET /health -> 200 {"status": "ok"}
class SimplexServer {
 public:
  explicit SimplexServer(const ServiceResources& resources);
  ~SimplexServer();

  HttpReply HandleSimplify(std::string_view body) const;
  HttpReply HandleHealth() const;

  // Binds to an ephemeral port and returns it, or -1 on failure.
  int BindToAnyPort(const std::string& host);
  // Returns false if binding fails. Blocks until Stop().
  bool Listen(const std::string& host, int port);
  bool ListenAfterBind();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace simplex

#endif  // SIMPLEX_SERVICE_H_
