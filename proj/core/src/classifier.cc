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

#include "simplex/classifier.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "simplex/errors.h"
#include "string_util.h"

namespace simplex {
namespace {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Binary cross-entropy of sigmoid(z) against target t, computed from the
// logit so it stays finite for saturated units.
double BceWithLogit(double z, double t) {
  return std::max(z, 0.0) - z * t + std::log1p(std::exp(-std::abs(z)));
}

struct Forward {
  std::array<double, kHiddenUnits> pre{};
  std::array<double, kHiddenUnits> hidden{};
  std::array<double, kOutputUnits> logits{};
};

Forward Run(const MlpParams& p, const FeatureVector& x) {
  Forward f;
  for (size_t h = 0; h < kHiddenUnits; ++h) {
    double z = p.b1(h);
    for (size_t i = 0; i < kNumFeatures; ++i) z += p.w1(h, i) * x[i];
    f.pre[h] = z;
    f.hidden[h] = std::max(z, 0.0);
  }
  for (size_t o = 0; o < kOutputUnits; ++o) {
    double z = p.b2(o);
    for (size_t h = 0; h < kHiddenUnits; ++h) z += p.w2(o, h) * f.hidden[h];
    f.logits[o] = z;
  }
  return f;
}

std::array<double, kOutputUnits> Targets(Complexity label) {
  return label == Complexity::kSimple ? std::array<double, 2>{1, 0}
                                      : std::array<double, 2>{0, 1};
}

void ValidateTrainingSet(std::span<const TrainingExample> examples) {
  if (examples.empty()) throw ValidationError("empty training set");
  const bool has_simple =
      std::any_of(examples.begin(), examples.end(), [](const auto& e) {
        return e.label == Complexity::kSimple;
      });
  const bool has_complex =
      std::any_of(examples.begin(), examples.end(), [](const auto& e) {
        return e.label == Complexity::kComplex;
      });
  if (!has_simple || !has_complex) {
    throw ValidationError("training set must contain both classes");
  }
}

// He-normal weights, small positive hidden biases so no unit starts dead.
MlpParams InitialParams(std::mt19937_64& rng) {
  MlpParams p;
  std::normal_distribution<double> in(0.0, std::sqrt(2.0 / kNumFeatures));
  std::normal_distribution<double> out(0.0, std::sqrt(2.0 / kHiddenUnits));
  for (size_t h = 0; h < kHiddenUnits; ++h) {
    for (size_t i = 0; i < kNumFeatures; ++i) p.w1(h, i) = in(rng);
    p.b1(h) = 0.1;
  }
  for (size_t o = 0; o < kOutputUnits; ++o) {
    for (size_t h = 0; h < kHiddenUnits; ++h) p.w2(o, h) = out(rng);
  }
  return p;
}

std::string JoinNumbers(std::span<const double> values) {
  return fmt::format("{}", fmt::join(values, " "));
}

std::vector<double> ParseNumbers(std::string_view line, std::string_view key,
                                 size_t count, int line_number) {
  std::vector<std::string_view> fields = internal::SplitWhitespace(line);
  if (fields.empty() || fields[0] != key || fields.size() != count + 1) {
    throw ParseError(fmt::format("line {}: expected '{}' with {} values",
                                 line_number, key, count),
                     line_number);
  }
  std::vector<double> out;
  for (size_t i = 1; i < fields.size(); ++i) {
    std::optional<double> v = internal::ParseNumber<double>(fields[i]);
    if (!v || !std::isfinite(*v)) {
      throw ParseError(
          fmt::format("line {}: bad number '{}'", line_number, fields[i]),
          line_number);
    }
    out.push_back(*v);
  }
  return out;
}

}  // namespace

std::string_view ComplexityName(Complexity c) {
  return c == Complexity::kSimple ? "simple" : "complex";
}

Complexity Relabel(double rating) {
  if (!(rating >= 1.0 && rating <= 6.0)) {
    throw ValidationError(fmt::format("rating {} outside [1, 6]", rating));
  }
  return rating < 3.0 ? Complexity::kSimple : Complexity::kComplex;
}

FeatureScaler FeatureScaler::Fit(std::span<const TrainingExample> examples) {
  FeatureScaler s;
  if (examples.empty()) return s;
  const double n = static_cast<double>(examples.size());
  for (size_t i = 0; i < kNumFeatures; ++i) {
    double sum = 0;
    for (const TrainingExample& e : examples) sum += e.features[i];
    const double mean = sum / n;
    double sq = 0;
    for (const TrainingExample& e : examples) {
      sq += (e.features[i] - mean) * (e.features[i] - mean);
    }
    const double sd = std::sqrt(sq / n);
    s.mean[i] = mean;
    s.stddev[i] = sd > 0 ? sd : 1.0;
  }
  return s;
}

FeatureVector FeatureScaler::Apply(const FeatureVector& x) const {
  FeatureVector out;
  for (size_t i = 0; i < kNumFeatures; ++i) {
    out[i] = (x[i] - mean[i]) / stddev[i];
  }
  return out;
}

double MlpLoss(const MlpParams& params,
               std::span<const TrainingExample> examples,
               MlpParams* gradient) {
  if (gradient != nullptr) gradient->values.fill(0.0);
  if (examples.empty()) return 0.0;
  double loss = 0;
  for (const TrainingExample& e : examples) {
    const Forward f = Run(params, e.features);
    const std::array<double, 2> t = Targets(e.label);
    for (size_t o = 0; o < kOutputUnits; ++o) {
      loss += BceWithLogit(f.logits[o], t[o]);
    }
    if (gradient == nullptr) continue;
    std::array<double, kHiddenUnits> d_hidden{};
    for (size_t o = 0; o < kOutputUnits; ++o) {
      const double d = Sigmoid(f.logits[o]) - t[o];
      gradient->b2(o) += d;
      for (size_t h = 0; h < kHiddenUnits; ++h) {
        gradient->w2(o, h) += d * f.hidden[h];
        d_hidden[h] += d * params.w2(o, h);
      }
    }
    for (size_t h = 0; h < kHiddenUnits; ++h) {
      if (f.pre[h] <= 0) continue;
      gradient->b1(h) += d_hidden[h];
      for (size_t i = 0; i < kNumFeatures; ++i) {
        gradient->w1(h, i) += d_hidden[h] * e.features[i];
      }
    }
  }
  const double n = static_cast<double>(examples.size());
  if (gradient != nullptr) {
    for (double& g : gradient->values) g /= n;
  }
  return loss / n;
}

ComplexityClassifier ComplexityClassifier::Train(
    std::span<const TrainingExample> examples, const TrainOptions& options,
    std::vector<double>* loss_history) {
  ValidateTrainingSet(examples);
  if (options.epochs < 0 || options.batch_size <= 0 ||
      !(options.learning_rate > 0)) {
    throw ValidationError("invalid training options");
  }
  const FeatureScaler scaler = FeatureScaler::Fit(examples);
  std::vector<TrainingExample> scaled(examples.begin(), examples.end());
  for (TrainingExample& e : scaled) e.features = scaler.Apply(e.features);

  std::mt19937_64 rng(options.seed);
  MlpParams params = InitialParams(rng);
  std::array<double, kNumParams> m{}, v{};
  int64_t step = 0;
  std::vector<size_t> order(scaled.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<TrainingExample> batch;
  batch.reserve(options.batch_size);
  if (loss_history != nullptr) loss_history->clear();

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (size_t start = 0; start < order.size(); start += options.batch_size) {
      batch.clear();
      const size_t end =
          std::min(order.size(), start + static_cast<size_t>(options.batch_size));
      for (size_t i = start; i < end; ++i) batch.push_back(scaled[order[i]]);
      MlpParams grad;
      MlpLoss(params, batch, &grad);
      ++step;
      const double c1 = 1.0 - std::pow(options.beta1, static_cast<double>(step));
      const double c2 = 1.0 - std::pow(options.beta2, static_cast<double>(step));
      for (size_t k = 0; k < kNumParams; ++k) {
        const double g = grad.values[k];
        m[k] = options.beta1 * m[k] + (1 - options.beta1) * g;
        v[k] = options.beta2 * v[k] + (1 - options.beta2) * g * g;
        params.values[k] -= options.learning_rate * (m[k] / c1) /
                            (std::sqrt(v[k] / c2) + options.epsilon);
      }
    }
    if (loss_history != nullptr) {
      loss_history->push_back(MlpLoss(params, scaled));
    }
  }
  return ComplexityClassifier(params, scaler);
}

ComplexityLabel ComplexityClassifier::Predict(const FeatureVector& raw) const {
  return PredictStandardized(scaler_.Apply(raw));
}

ComplexityLabel ComplexityClassifier::PredictStandardized(
    const FeatureVector& scaled) const {
  const Forward f = Run(params_, scaled);
  ComplexityLabel out;
  // Saturated units are pulled back inside the open interval.
  constexpr double kLow = std::numeric_limits<double>::min();
  const double high = std::nextafter(1.0, 0.0);
  out.probabilities = {std::clamp(Sigmoid(f.logits[0]), kLow, high),
                       std::clamp(Sigmoid(f.logits[1]), kLow, high)};
  out.label = out.probabilities[1] > out.probabilities[0]
                  ? Complexity::kComplex
                  : Complexity::kSimple;
  return out;
}

std::string ComplexityClassifier::Serialize() const {
  const auto& p = params_.values;
  std::span<const double> all(p);
  return fmt::format(
      "{}\narchitecture {} {} {}\nmean {}\nstddev {}\nw1 {}\nb1 {}\nw2 {}\n"
      "b2 {}\n",
      kMagic, kNumFeatures, kHiddenUnits, kOutputUnits,
      JoinNumbers(scaler_.mean), JoinNumbers(scaler_.stddev),
      JoinNumbers(all.subspan(0, MlpParams::kB1)),
      JoinNumbers(all.subspan(MlpParams::kB1, kHiddenUnits)),
      JoinNumbers(all.subspan(MlpParams::kW2, kOutputUnits * kHiddenUnits)),
      JoinNumbers(all.subspan(MlpParams::kB2, kOutputUnits)));
}

ComplexityClassifier ComplexityClassifier::Deserialize(std::string_view data) {
  std::vector<std::string_view> lines = internal::Split(data, '\n');
  while (!lines.empty() && internal::Strip(lines.back()).empty()) {
    lines.pop_back();
  }
  if (lines.empty() || internal::StripTrailing(lines[0]) != kMagic) {
    throw ParseError("missing SIMPLEX-MLP1 header", 1);
  }
  if (lines.size() != 8) {
    throw ParseError(fmt::format("expected 8 lines, got {}", lines.size()));
  }
  const std::vector<double> arch = ParseNumbers(lines[1], "architecture", 3, 2);
  if (arch != std::vector<double>{kNumFeatures, kHiddenUnits, kOutputUnits}) {
    throw ParseError("unsupported architecture", 2);
  }
  FeatureScaler scaler;
  const std::vector<double> mean = ParseNumbers(lines[2], "mean", 5, 3);
  const std::vector<double> sd = ParseNumbers(lines[3], "stddev", 5, 4);
  for (size_t i = 0; i < kNumFeatures; ++i) {
    if (!(sd[i] > 0)) throw ParseError("stddev must be positive", 4);
    scaler.mean[i] = mean[i];
    scaler.stddev[i] = sd[i];
  }
  MlpParams params;
  size_t k = 0;
  const std::pair<std::string_view, size_t> blocks[] = {
      {"w1", kHiddenUnits * kNumFeatures},
      {"b1", kHiddenUnits},
      {"w2", kOutputUnits * kHiddenUnits},
      {"b2", kOutputUnits}};
  int line_number = 5;
  for (const auto& [key, count] : blocks) {
    for (double v : ParseNumbers(lines[line_number - 1], key, count,
                                 line_number)) {
      params.values[k++] = v;
    }
    ++line_number;
  }
  return ComplexityClassifier(params, scaler);
}

void ComplexityClassifier::Save(const std::string& path) const {
  internal::WriteFile(path, Serialize());
}

ComplexityClassifier ComplexityClassifier::Load(const std::string& path) {
  return Deserialize(internal::ReadFile(path));
}

std::vector<std::pair<std::string, double>> ParseLexicon(
    std::string_view text) {
  std::vector<std::pair<std::string, double>> out;
  int line_number = 0;
  for (std::string_view line : internal::Split(text, '\n')) {
    ++line_number;
    line = internal::Strip(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields = internal::Split(line, '\t');
    std::optional<double> rating;
    if (fields.size() == 2) {
      rating = internal::ParseNumber<double>(internal::Strip(fields[1]));
    }
    if (!rating || fields[0].empty()) {
      throw ParseError(
          fmt::format("lexicon line {}: expected word<TAB>rating", line_number),
          line_number);
    }
    if (!(*rating >= 1.0 && *rating <= 6.0)) {
      throw ParseError(fmt::format("lexicon line {}: rating {} outside [1, 6]",
                                   line_number, *rating),
                       line_number);
    }
    out.emplace_back(internal::AsciiLower(fields[0]), *rating);
  }
  return out;
}

std::vector<std::pair<std::string, double>> ReadLexicon(
    const std::string& path) {
  return ParseLexicon(internal::ReadFile(path));
}

std::vector<TrainingExample> BuildTrainingSet(
    std::span<const std::pair<std::string, double>> lexicon,
    const NGramModel& model, const Thesaurus& thesaurus) {
  std::vector<TrainingExample> out;
  out.reserve(lexicon.size());
  for (const auto& [word, rating] : lexicon) {
    out.push_back({ExtractFeatures(word, model, thesaurus), Relabel(rating)});
  }
  return out;
}

}  // namespace simplex
