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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "simplex/classifier.h"
#include "simplex/errors.h"
#include "simplex/evaluation.h"
#include "simplex/trace_json.h"

namespace simplex::cli {
namespace {

struct Flags {
  ServiceConfig config;
  std::string mode;
  std::string input = "-";
  bool trace = false;
  // evaluate
  std::string orig, system;
  std::vector<std::string> refs;
  // train / build-lm
  std::string output;
  int epochs = TrainOptions{}.epochs;
  uint64_t seed = TrainOptions{}.seed;
};

void AddResourceFlags(CLI::App* cmd, Flags& f) {
  ServiceConfig& c = f.config;
  cmd->add_option("--corpus", c.corpus,
                  "Corpus (one sentence per line) or saved language model");
  cmd->add_option("--lexicon", c.lexicon,
                  "Word-complexity lexicon used to train the classifier");
  cmd->add_option("--classifier", c.classifier, "Trained classifier file");
  cmd->add_option("--thesaurus", c.thesaurus, "Thesaurus TSV or http(s) URL");
  cmd->add_option("--vectors", c.vectors, "Word vectors (word-embedding mode)");
  cmd->add_option("--embed-endpoint", c.embed_endpoint,
                  "Sentence embeddings: mock:, cache:<path> or http(s) URL");
  cmd->add_option("--morphology", c.morphology, "Morphology data directory");
}

void AddModeFlags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--mode", f.mode, "we | transformer");
  cmd->add_option("--phi", f.config.phi, "Bigram factor in [0, 1]");
  cmd->add_option("--model", f.config.model, "Sentence-embedding model id");
}

void ApplyMode(const Flags& f, ServiceConfig* config) {
  if (f.mode.empty()) return;
  std::optional<Mode> mode = ParseMode(f.mode);
  if (!mode) {
    throw ValidationError(
        fmt::format("--mode must be 'we' or 'transformer', got '{}'", f.mode));
  }
  config->mode = *mode;
}

int RunSimplify(const Flags& f, std::istream& in, std::ostream& out,
                std::ostream& err) {
  std::unique_ptr<ServiceResources> resources =
      ServiceResources::Load(f.config);
  std::ifstream file;
  std::istream* source = &in;
  if (f.input != "-") {
    file.open(f.input);
    if (!file) throw IoError(fmt::format("cannot open {}", f.input));
    source = &file;
  }
  std::string line;
  while (std::getline(*source, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); })) {
      out << '\n';  // keep line alignment
      if (f.trace) err << "{}\n";
      continue;
    }
    const SimplificationResult result =
        resources->Simplify(Sentence::Parse(line), {});
    out << result.output.ToString() << '\n';
    if (f.trace) err << SimplifyResponseJson(result) << '\n';
  }
  out.flush();
  return kExitOk;
}

int RunEvaluate(const Flags& f, std::ostream& out) {
  if (!(f.config.phi >= 0.0 && f.config.phi <= 1.0)) {
    throw ValidationError(
        fmt::format("--phi must be a number in [0, 1], got {}", f.config.phi));
  }
  const std::vector<EvaluationRecord> records =
      ReadEvaluationRecords(f.orig, f.system, f.refs);
  const NGramModel model = LoadLanguageModel(f.config.corpus);
  const EvaluationReport r = EvaluateCorpus(records, model, f.config.phi);

  fmt::print(out, "{:>8}  {:>8}\n", "record", "SARI");
  for (size_t i = 0; i < r.sari.size(); ++i) {
    fmt::print(out, "{:>8}  {:>8.4f}\n", i + 1, r.sari[i]);
  }
  fmt::print(out, "\n{:<24}{:>12.4f}\n", "mean SARI", r.mean_sari);
  fmt::print(out, "{:<24}{:>12.4f}\n", "mean PP (original)", r.mean_original_pp);
  fmt::print(out, "{:<24}{:>12.4f}\n", "mean PP (simplified)",
             r.mean_simplified_pp);
  fmt::print(out, "{:<24}{:>11.2f}%\n\n", "perplexity decrease",
             r.perplexity_decrease);
  // Machine-readable lines, shortest round-trip doubles.
  for (size_t i = 0; i < r.sari.size(); ++i) {
    fmt::print(out, "sari[{}]={}\n", i, r.sari[i]);
  }
  fmt::print(out, "mean_sari={}\n", r.mean_sari);
  fmt::print(out, "mean_original_pp={}\n", r.mean_original_pp);
  fmt::print(out, "mean_simplified_pp={}\n", r.mean_simplified_pp);
  fmt::print(out, "perplexity_decrease={}\n", r.perplexity_decrease);
  fmt::print(out, "records={}\nreferences={}\nphi={}\n", r.sari.size(),
             f.refs.size(), f.config.phi);
  return kExitOk;
}

int RunServe(const Flags& f, std::ostream& out) {
  std::unique_ptr<ServiceResources> resources =
      ServiceResources::Load(f.config);
  const auto [host, port] = ParseListenAddress(f.config.listen);
  SimplexServer server(*resources);
  fmt::print(out, "simplex listening on {}:{}\n", host, port);
  out.flush();
  if (!server.Listen(host, port)) {
    throw IoError(fmt::format("cannot listen on {}", f.config.listen));
  }
  return kExitOk;
}

int RunTrain(const Flags& f, std::ostream& out) {
  if (f.config.corpus.empty() || f.config.lexicon.empty() ||
      f.config.thesaurus.empty() || f.output.empty()) {
    throw ValidationError(
        "train needs --corpus, --lexicon, --thesaurus and --output");
  }
  if (f.epochs <= 0) throw ValidationError("--epochs must be positive");
  const NGramModel model = LoadLanguageModel(f.config.corpus);
  const OfflineThesaurus thesaurus = OfflineThesaurus::Load(f.config.thesaurus);
  const auto lexicon = ReadLexicon(f.config.lexicon);
  const std::vector<TrainingExample> examples =
      BuildTrainingSet(lexicon, model, thesaurus);
  TrainOptions options;
  options.epochs = f.epochs;
  options.seed = f.seed;
  std::vector<double> loss;
  const ComplexityClassifier c =
      ComplexityClassifier::Train(examples, options, &loss);
  c.Save(f.output);
  size_t correct = 0;
  for (const TrainingExample& e : examples) {
    correct += c.Predict(e.features).label == e.label;
  }
  fmt::print(out, "examples={}\nepochs={}\nfinal_loss={}\ntrain_accuracy={}\n",
             examples.size(), f.epochs, loss.back(),
             static_cast<double>(correct) / examples.size());
  return kExitOk;
}

int RunBuildLm(const Flags& f, std::ostream& out) {
  if (f.config.corpus.empty() || f.output.empty()) {
    throw ValidationError("build-lm needs --corpus and --output");
  }
  const NGramModel model = LoadLanguageModel(f.config.corpus);
  model.Save(f.output);
  fmt::print(out, "vocab_size={}\ntotal_tokens={}\nbigrams={}\n",
             model.vocab_size(), model.total_tokens(), model.distinct_bigrams());
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err, const EnvLookup& env) {
  Flags f;
  CLI::App app("Lexical text simplification", "simplex");
  app.require_subcommand(1);

  CLI::App* simplify = app.add_subcommand(
      "simplify", "Simplify one sentence per input line");
  AddResourceFlags(simplify, f);
  AddModeFlags(simplify, f);
  simplify->add_option("--input", f.input, "Input file, - for stdin");
  simplify->add_flag("--trace", f.trace,
                     "Write one JSON trace per line to stderr");

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "SARI and perplexity decrease");
  evaluate->add_option("--orig", f.orig, "Original sentences")->required();
  evaluate->add_option("--system", f.system, "System outputs")->required();
  evaluate->add_option("--refs", f.refs, "Reference file (repeatable)")
      ->required()
      ->take_all();
  evaluate->add_option("--corpus", f.config.corpus,
                       "Corpus or saved language model")
      ->required();
  evaluate->add_option("--phi", f.config.phi, "Bigram factor in [0, 1]");

  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  AddResourceFlags(serve, f);
  AddModeFlags(serve, f);
  serve->add_option("--listen", f.config.listen, "host:port");

  CLI::App* train =
      app.add_subcommand("train", "Train the complexity classifier");
  train->add_option("--corpus", f.config.corpus, "Corpus or language model");
  train->add_option("--lexicon", f.config.lexicon, "word<TAB>rating lexicon");
  train->add_option("--thesaurus", f.config.thesaurus, "Thesaurus TSV");
  train->add_option("--output", f.output, "Classifier file to write");
  train->add_option("--epochs", f.epochs, "Training epochs");
  train->add_option("--seed", f.seed, "Initialization and shuffling seed");

  CLI::App* build_lm =
      app.add_subcommand("build-lm", "Count n-grams and save the model");
  build_lm->add_option("--corpus", f.config.corpus, "Corpus text");
  build_lm->add_option("--output", f.output, "Model file to write");

  // Environment first so explicit flags win. A bad variable only matters
  // to the subcommands that read the service configuration.
  std::string env_error;
  try {
    ApplyEnvironment(env, &f.config);
  } catch (const ValidationError& e) {
    env_error = e.what();
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (!env_error.empty() && (*simplify || *serve)) {
      throw ValidationError(env_error);
    }
    ApplyMode(f, &f.config);
    if (*simplify) return RunSimplify(f, in, out, err);
    if (*evaluate) return RunEvaluate(f, out);
    if (*serve) return RunServe(f, out);
    if (*train) return RunTrain(f, out);
    if (*build_lm) return RunBuildLm(f, out);
  } catch (const ValidationError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitConfigError;
  } catch (const IoError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitResourceError;
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitResourceError;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace simplex::cli
