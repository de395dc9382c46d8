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

#include "simplex/service.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>

#include <fmt/format.h>

#include "httplib.h"
#include "json.hpp"
#include "simplex/errors.h"
#include "simplex/trace_json.h"
#include "string_util.h"

namespace simplex {
namespace {

using Json = nlohmann::ordered_json;

bool IsUrl(std::string_view s) {
  return s.starts_with("http://") || s.starts_with("https://");
}

double ParsePhi(std::string_view text, std::string_view name) {
  std::optional<double> phi = internal::ParseNumber<double>(text);
  if (!phi || !(*phi >= 0.0 && *phi <= 1.0)) {
    throw ValidationError(
        fmt::format("{} must be a number in [0, 1], got '{}'", name, text));
  }
  return *phi;
}

std::string DefaultMorphologyDir() {
  const std::filesystem::path installed = SIMPLEX_INSTALLED_DATA_DIR;
  if (std::filesystem::is_directory(installed / "morphology")) {
    return (installed / "morphology").string();
  }
  return std::string(SIMPLEX_SOURCE_DATA_DIR) + "/morphology";
}

HttpReply ErrorReply(int status, std::string_view message) {
  return {status, Json{{"error", message}}.dump(
                      -1, ' ', false, Json::error_handler_t::replace)};
}

}  // namespace

EnvLookup SystemEnvironment() {
  return [](std::string_view name) -> std::optional<std::string> {
    const char* v = std::getenv(std::string(name).c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
}

void ApplyEnvironment(const EnvLookup& env, ServiceConfig* config) {
  const std::pair<const char*, std::string*> paths[] = {
      {"SIMPLEX_CORPUS", &config->corpus},
      {"SIMPLEX_LEXICON", &config->lexicon},
      {"SIMPLEX_CLASSIFIER", &config->classifier},
      {"SIMPLEX_THESAURUS", &config->thesaurus},
      {"SIMPLEX_VECTORS", &config->vectors},
      {"SIMPLEX_EMBED_ENDPOINT", &config->embed_endpoint},
      {"SIMPLEX_MORPHOLOGY", &config->morphology},
      {"SIMPLEX_MODEL", &config->model},
      {"SIMPLEX_LISTEN", &config->listen},
  };
  for (const auto& [name, field] : paths) {
    if (std::optional<std::string> v = env(name)) *field = *v;
  }
  if (std::optional<std::string> v = env("SIMPLEX_PHI")) {
    config->phi = ParsePhi(*v, "SIMPLEX_PHI");
  }
  if (std::optional<std::string> v = env("SIMPLEX_MODE")) {
    std::optional<Mode> mode = ParseMode(*v);
    if (!mode) {
      throw ValidationError(fmt::format(
          "SIMPLEX_MODE must be 'we' or 'transformer', got '{}'", *v));
    }
    config->mode = *mode;
  }
}

void ValidateConfig(const ServiceConfig& config) {
  if (!(config.phi >= 0.0 && config.phi <= 1.0)) {
    throw ValidationError(
        fmt::format("--phi must be a number in [0, 1], got {}", config.phi));
  }
  if (config.corpus.empty()) {
    throw ValidationError("--corpus (SIMPLEX_CORPUS) is required");
  }
  if (config.thesaurus.empty()) {
    throw ValidationError("--thesaurus (SIMPLEX_THESAURUS) is required");
  }
  if (config.classifier.empty() && config.lexicon.empty()) {
    throw ValidationError(
        "--classifier (SIMPLEX_CLASSIFIER) or --lexicon (SIMPLEX_LEXICON) is "
        "required");
  }
  if (config.mode == Mode::kWordEmbedding && config.vectors.empty()) {
    throw ValidationError(
        "--mode we needs --vectors (SIMPLEX_VECTORS)");
  }
  if (config.mode == Mode::kTransformer && config.embed_endpoint.empty()) {
    throw ValidationError(
        "--mode transformer needs --embed-endpoint (SIMPLEX_EMBED_ENDPOINT)");
  }
  if (config.model.empty()) throw ValidationError("--model must not be empty");
  const std::string_view e = config.embed_endpoint;
  if (!e.empty() && e != "mock" && e != "mock:" && !e.starts_with("cache:") &&
      !IsUrl(e)) {
    throw ValidationError(fmt::format(
        "--embed-endpoint '{}' is not mock:, cache:<path> or an http URL", e));
  }
  ParseListenAddress(config.listen);
}

std::pair<std::string, int> ParseListenAddress(std::string_view address) {
  const size_t colon = address.rfind(':');
  std::optional<int> port;
  if (colon != std::string_view::npos && colon > 0) {
    port = internal::ParseNumber<int>(address.substr(colon + 1));
  }
  if (!port || *port < 0 || *port > 65535) {
    throw ValidationError(fmt::format(
        "--listen (SIMPLEX_LISTEN) must be host:port, got '{}'", address));
  }
  return {std::string(address.substr(0, colon)), *port};
}

NGramModel LoadLanguageModel(const std::string& path) {
  const std::string text = internal::ReadFile(path);
  if (text.starts_with(NGramModel::kMagic)) return NGramModel::Deserialize(text);
  const std::vector<Sentence> corpus = ReadSentences(path);
  if (corpus.empty()) throw ParseError(fmt::format("{}: empty corpus", path));
  return NGramModel::Build(corpus);
}

std::unique_ptr<ServiceResources> ServiceResources::Load(
    const ServiceConfig& config) {
  ValidateConfig(config);
  std::unique_ptr<ServiceResources> r(new ServiceResources(config));
  ServiceConfig& c = r->config_;
  if (c.morphology.empty()) c.morphology = DefaultMorphologyDir();

  r->model_ = std::make_unique<NGramModel>(LoadLanguageModel(c.corpus));
  r->morphology_ = std::make_unique<Morphology>(Morphology::Load(c.morphology));
  if (IsUrl(c.thesaurus)) {
    r->thesaurus_ = std::make_unique<RemoteThesaurus>(c.thesaurus);
  } else {
    auto offline =
        std::make_unique<OfflineThesaurus>(OfflineThesaurus::Load(c.thesaurus));
    r->morphology_->AddBaseForms(*offline);
    r->thesaurus_ = std::move(offline);
  }
  if (!c.classifier.empty()) {
    r->classifier_ = std::make_unique<ComplexityClassifier>(
        ComplexityClassifier::Load(c.classifier));
  } else {
    const auto lexicon = ReadLexicon(c.lexicon);
    const std::vector<TrainingExample> examples =
        BuildTrainingSet(lexicon, *r->model_, *r->thesaurus_);
    r->classifier_ = std::make_unique<ComplexityClassifier>(
        ComplexityClassifier::Train(examples));
  }
  if (!c.vectors.empty()) {
    r->vectors_ =
        std::make_unique<WordVectorStore>(WordVectorStore::Load(c.vectors));
  }
  if (!c.embed_endpoint.empty()) {
    // Opens cache files eagerly so a bad path is a startup error.
    try {
      r->Embedder(c.model);
    } catch (const ProviderError& e) {
      throw IoError(e.what());
    }
  }
  return r;
}

SimplificationConfig ServiceResources::Resolve(
    const SimplifyOptions& options) const {
  SimplificationConfig out{options.mode.value_or(config_.mode),
                           options.phi.value_or(config_.phi)};
  ValidatePhi(out.phi);
  if (out.mode == Mode::kWordEmbedding && vectors_ == nullptr) {
    throw ProviderError("word vectors are not configured on this service");
  }
  if (out.mode == Mode::kTransformer && config_.embed_endpoint.empty()) {
    throw ProviderError(
        "no sentence-embedding endpoint is configured on this service");
  }
  return out;
}

std::string ServiceResources::ResolveModel(
    const SimplifyOptions& options) const {
  return options.model.value_or(config_.model);
}

const SentenceEmbedder& ServiceResources::Embedder(
    const std::string& model) const {
  std::lock_guard<std::mutex> lock(embedders_mu_);
  auto it = embedders_.find(model);
  if (it == embedders_.end()) {
    if (config_.embed_endpoint.empty()) {
      throw ProviderError("no sentence-embedding endpoint is configured");
    }
    std::unique_ptr<SentenceEmbedder> e;
    try {
      e = MakeSentenceEmbedder(config_.embed_endpoint, model);
    } catch (const IoError& err) {
      throw ProviderError(err.what());
    } catch (const ParseError& err) {
      throw ProviderError(err.what());
    }
    it = embedders_.emplace(model, std::move(e)).first;
  }
  return *it->second;
}

void ServiceResources::Probe(const Sentence& sentence,
                             const SimplifyOptions& options) const {
  const SimplificationConfig cfg = Resolve(options);
  if (cfg.mode != Mode::kTransformer) return;
  try {
    Embedder(ResolveModel(options)).Embed(sentence);
  } catch (const MissingEmbeddingError&) {
    // A cache without this sentence is not an outage; positions degrade.
  }
}

SimplificationResult ServiceResources::Simplify(
    const Sentence& sentence, const SimplifyOptions& options) const {
  const SimplificationConfig cfg = Resolve(options);
  PipelineResources p{model_.get(),      classifier_.get(),
                      thesaurus_.get(),  morphology_.get(),
                      vectors_.get(),    nullptr};
  if (cfg.mode == Mode::kTransformer) p.embedder = &Embedder(ResolveModel(options));
  return Simplifier(p).Simplify(sentence, cfg);
}

struct SimplexServer::Impl {
  const ServiceResources& resources;
  httplib::Server server;
};

SimplexServer::SimplexServer(const ServiceResources& resources)
    : impl_(new Impl{resources, {}}) {
  httplib::Server& s = impl_->server;
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(reply.body, "application/json");
  };
  s.Post("/simplify", [this, send](const httplib::Request& req,
                                   httplib::Response& res) {
    send(res, HandleSimplify(req.body));
  });
  s.Get("/health", [this, send](const httplib::Request&,
                                httplib::Response& res) {
    send(res, HandleHealth());
  });
  s.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

SimplexServer::~SimplexServer() { Stop(); }

HttpReply SimplexServer::HandleHealth() const {
  return {200, R"({"status":"ok"})"};
}

HttpReply SimplexServer::HandleSimplify(std::string_view body) const {
  Json request;
  try {
    request = Json::parse(body);
  } catch (const Json::parse_error& e) {
    return ErrorReply(400, fmt::format("malformed JSON: {}", e.what()));
  }
  if (!request.is_object()) return ErrorReply(400, "body must be an object");
  const auto sentence_it = request.find("sentence");
  if (sentence_it == request.end() || !sentence_it->is_string()) {
    return ErrorReply(400, "'sentence' must be a string");
  }
  const std::string text = sentence_it->get<std::string>();
  if (internal::SplitWhitespace(text).empty()) {
    return ErrorReply(400, "'sentence' must not be empty");
  }
  SimplifyOptions options;
  if (auto it = request.find("mode"); it != request.end() && !it->is_null()) {
    std::optional<Mode> mode =
        it->is_string() ? ParseMode(it->get<std::string>()) : std::nullopt;
    if (!mode) return ErrorReply(400, "'mode' must be \"we\" or \"transformer\"");
    options.mode = mode;
  }
  if (auto it = request.find("phi"); it != request.end() && !it->is_null()) {
    if (!it->is_number() || !(it->get<double>() >= 0.0 && it->get<double>() <= 1.0)) {
      return ErrorReply(400, "'phi' must be a number in [0, 1]");
    }
    options.phi = it->get<double>();
  }
  if (auto it = request.find("model"); it != request.end() && !it->is_null()) {
    if (!it->is_string() || it->get<std::string>().empty()) {
      return ErrorReply(400, "'model' must be a non-empty string");
    }
    options.model = it->get<std::string>();
  }
  try {
    const Sentence sentence = Sentence::Parse(text);
    impl_->resources.Probe(sentence, options);
    return {200, SimplifyResponseJson(
                     impl_->resources.Simplify(sentence, options))};
  } catch (const ValidationError& e) {
    return ErrorReply(400, e.what());
  } catch (const ProviderError& e) {
    return ErrorReply(503, e.what());
  } catch (const Error& e) {
    return ErrorReply(500, e.what());
  }
}

int SimplexServer::BindToAnyPort(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool SimplexServer::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

bool SimplexServer::ListenAfterBind() {
  return impl_->server.listen_after_bind();
}

void SimplexServer::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void SimplexServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace simplex
