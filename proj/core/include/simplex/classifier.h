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

#ifndef SIMPLEX_CLASSIFIER_H_
#define SIMPLEX_CLASSIFIER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simplex/features.h"
#include "simplex/ngram_model.h"
#include "simplex/thesaurus.h"

namespace simplex {

enum class Complexity { kSimple, kComplex };

std::string_view ComplexityName(Complexity c);

struct ComplexityLabel {
  Complexity label = Complexity::kSimple;
  // Raw sigmoid outputs (p_simple, p_complex); not renormalized.
  std::array<double, 2> probabilities = {0.5, 0.5};
};

// Ratings below 3 are simple, 3 and above complex. Throws ValidationError
// outside [1, 6].
Complexity Relabel(double rating);

struct TrainingExample {
  FeatureVector features;
  Complexity label;
};

inline constexpr size_t kHiddenUnits = 3;
inline constexpr size_t kOutputUnits = 2;
inline constexpr size_t kNumParams =
    kHiddenUnits * kNumFeatures + kHiddenUnits +
    kOutputUnits * kHiddenUnits + kOutputUnits;

// Flat parameter vector of the 5-3-2 network: W1 (row-major 3x5), b1, W2
// (row-major 2x3), b2. Output unit 0 is "simple", unit 1 "complex".
struct MlpParams {
  std::array<double, kNumParams> values{};

  double& w1(size_t h, size_t i) { return values[h * kNumFeatures + i]; }
  double w1(size_t h, size_t i) const { return values[h * kNumFeatures + i]; }
  double& b1(size_t h) { return values[kB1 + h]; }
  double b1(size_t h) const { return values[kB1 + h]; }
  double& w2(size_t o, size_t h) { return values[kW2 + o * kHiddenUnits + h]; }
  double w2(size_t o, size_t h) const {
    return values[kW2 + o * kHiddenUnits + h];
  }
  double& b2(size_t o) { return values[kB2 + o]; }
  double b2(size_t o) const { return values[kB2 + o]; }

  bool operator==(const MlpParams&) const = default;

  static constexpr size_t kB1 = kHiddenUnits * kNumFeatures;
  static constexpr size_t kW2 = kB1 + kHiddenUnits;
  static constexpr size_t kB2 = kW2 + kOutputUnits * kHiddenUnits;
};

// Per-feature z-score standardization. A zero standard deviation is stored
// as 1 so constant features pass through centred.
struct FeatureScaler {
  FeatureVector mean{};
  FeatureVector stddev{1, 1, 1, 1, 1};

  static FeatureScaler Fit(std::span<const TrainingExample> examples);
  FeatureVector Apply(const FeatureVector& x) const;

  bool operator==(const FeatureScaler&) const = default;
};

struct TrainOptions {
  int epochs = 200;
  int batch_size = 32;
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  uint64_t seed = 42;
};

// Mean over `examples` of the per-unit binary cross-entropy against one-hot
// targets. Features must already be standardized. If `gradient` is non-null
// it receives d(loss)/d(params).
double MlpLoss(const MlpParams& params,
               std::span<const TrainingExample> examples,
               MlpParams* gradient = nullptr);

// 5-3-2 multilayer perceptron: ReLU hidden layer, sigmoid outputs, with the
// feature scaler stored alongside the weights. Immutable once built.
class ComplexityClassifier {
 public:
  static constexpr std::string_view kMagic = "SIMPLEX-MLP1";

  // All-zero weights and an identity scaler.
  ComplexityClassifier() = default;
  ComplexityClassifier(MlpParams params, FeatureScaler scaler)
      : params_(params), scaler_(scaler) {}

  // Fits the scaler on `examples`, then runs Adam over shuffled mini-batches.
  // `loss_history`, if given, receives the full-set loss after every epoch.
  // Throws ValidationError for an empty or single-class dataset.
  static ComplexityClassifier Train(std::span<const TrainingExample> examples,
                                    const TrainOptions& options = {},
                                    std::vector<double>* loss_history = nullptr);

  ComplexityLabel Predict(const FeatureVector& raw) const;
  // For features already passed through scaler().Apply().
  ComplexityLabel PredictStandardized(const FeatureVector& scaled) const;

  const MlpParams& params() const { return params_; }
  const FeatureScaler& scaler() const { return scaler_; }

  // Text format: magic line, "architecture 5 3 2", then "mean", "stddev",
  // "w1", "b1", "w2", "b2" lines of shortest round-trip decimals.
  std::string Serialize() const;
  static ComplexityClassifier Deserialize(std::string_view data);
  void Save(const std::string& path) const;
  static ComplexityClassifier Load(const std::string& path);

 private:
  MlpParams params_;
  FeatureScaler scaler_;
};

// "word<TAB>rating" lines. Throws IoError / ParseError (with line number,
// also for ratings outside [1, 6]).
std::vector<std::pair<std::string, double>> ReadLexicon(
    const std::string& path);
std::vector<std::pair<std::string, double>> ParseLexicon(std::string_view text);

// Features from `model` and `thesaurus`, labels from Relabel(rating).
std::vector<TrainingExample> BuildTrainingSet(
    std::span<const std::pair<std::string, double>> lexicon,
    const NGramModel& model, const Thesaurus& thesaurus);

}  // namespace simplex

#endif  // SIMPLEX_CLASSIFIER_H_
