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

#include <cmath>
#include <filesystem>
#include <vector>

#include "gtest/gtest.h"
#include "simplex/errors.h"
#include "simplex/features.h"
#include "simplex/ngram_model.h"
#include "simplex/sentence.h"
#include "simplex/thesaurus.h"
#include "support/classifier_oracles.h"

namespace simplex {
namespace {

NGramModel TinyModel() {
  std::vector<Sentence> s = {Sentence::Parse("the cat sat"),
                             Sentence::Parse("the dog sat")};
  return NGramModel::Build(s);
}

TEST(FeaturesTest, ComposesModelAndThesaurus) {
  const NGramModel m = TinyModel();
  const OfflineThesaurus th = OfflineThesaurus::Parse("zebra\tnoun\t2\tequine\n");
  EXPECT_EQ(ExtractFeatures("the", m, th), (FeatureVector{0.5, 2, 2, 3, 0}));
  EXPECT_EQ(ExtractFeatures("zebra", m, th),
            (FeatureVector{1.0 / 24, 0, 0, 5, 2}));
  std::vector<Sentence> one = {Sentence::Parse("a")};
  EXPECT_EQ(ExtractFeatures("a", NGramModel::Build(one),
                            OfflineThesaurus::Parse("")),
            (FeatureVector{1.0, 1, 1, 1, 0}));
}

TEST(FeaturesTest, LengthCountsCodePoints) {
  EXPECT_EQ(CharacterLength("caf\xc3\xa9"), 4u);
  EXPECT_EQ(CharacterLength("\xc2\xa3" "5,000"), 6u);
}

TEST(RelabelTest, ThresholdAtThree) {
  EXPECT_EQ(Relabel(1.2), Complexity::kSimple);
  EXPECT_EQ(Relabel(2.999), Complexity::kSimple);
  EXPECT_EQ(Relabel(3.0), Complexity::kComplex);
  EXPECT_EQ(Relabel(5.8), Complexity::kComplex);
  EXPECT_THROW(Relabel(0.9), ValidationError);
  EXPECT_THROW(Relabel(6.1), ValidationError);
  EXPECT_THROW(Relabel(std::nan("")), ValidationError);
}

TEST(ClassifierTest, ZeroWeightsTieToSimple) {
  ComplexityClassifier c;
  ComplexityLabel label = c.Predict({0.3, 4, 5, 6, 7});
  EXPECT_EQ(label.probabilities[0], 0.5);
  EXPECT_EQ(label.probabilities[1], 0.5);
  EXPECT_EQ(label.label, Complexity::kSimple);
}

TEST(ClassifierTest, SwappingOutputRowsFlipsLabels) {
  const auto train = testing::SeparableSet(7, 200);
  ComplexityClassifier c = ComplexityClassifier::Train(train, {.epochs = 50});
  MlpParams swapped = c.params();
  for (size_t h = 0; h < kHiddenUnits; ++h) {
    std::swap(swapped.w2(0, h), swapped.w2(1, h));
  }
  std::swap(swapped.b2(0), swapped.b2(1));
  ComplexityClassifier flipped(swapped, c.scaler());
  for (const TrainingExample& e : train) {
    ComplexityLabel a = c.Predict(e.features);
    ComplexityLabel b = flipped.Predict(e.features);
    EXPECT_EQ(a.probabilities[0], b.probabilities[1]);
    if (a.probabilities[0] != a.probabilities[1]) EXPECT_NE(a.label, b.label);
  }
}

TEST(ClassifierTest, LearnsSeparableSet) {
  auto all = testing::SeparableSet(20211);
  std::vector<TrainingExample> train(all.begin(), all.begin() + 400);
  std::vector<TrainingExample> test(all.begin() + 400, all.end());
  std::vector<double> history;
  ComplexityClassifier c = ComplexityClassifier::Train(train, {}, &history);
  EXPECT_GE(testing::Accuracy(c, test), 0.95);
  ASSERT_EQ(history.size(), 200u);
  for (size_t i = 180; i < history.size(); ++i) {
    EXPECT_LE(history[i], history[i - 1]) << "epoch " << i;
  }
  EXPECT_EQ(c.Predict({0.9, 10, 10, 5, 1}).label, Complexity::kSimple);
  EXPECT_EQ(c.Predict({0.1, 10, 10, 5, 1}).label, Complexity::kComplex);
}

TEST(ClassifierTest, OutputsStayStrictlyInsideUnitInterval) {
  ComplexityClassifier c = ComplexityClassifier::Train(
      testing::SeparableSet(3, 100), {.epochs = 20});
  for (double big : {1e3, 1e6, -1e6}) {
    ComplexityLabel l = c.Predict({big, big, big, big, big});
    for (double p : l.probabilities) {
      EXPECT_GT(p, 0.0);
      EXPECT_LT(p, 1.0);
    }
  }
}

TEST(ClassifierTest, StandardizedInputMatchesRaw) {
  ComplexityClassifier c = ComplexityClassifier::Train(
      testing::SeparableSet(11, 100), {.epochs = 20});
  FeatureVector x = {0.7, 3, 40, 9, 2};
  EXPECT_EQ(c.Predict(x).probabilities,
            c.PredictStandardized(c.scaler().Apply(x)).probabilities);
}

TEST(ClassifierTest, TrainingIsDeterministic) {
  auto data = testing::SeparableSet(5, 120);
  TrainOptions options{.epochs = 30, .seed = 99};
  EXPECT_EQ(ComplexityClassifier::Train(data, options).params(),
            ComplexityClassifier::Train(data, options).params());
  options.seed = 100;
  EXPECT_NE(ComplexityClassifier::Train(data, {.epochs = 30, .seed = 99}).params(),
            ComplexityClassifier::Train(data, options).params());
}

TEST(ClassifierTest, RejectsDegenerateTrainingSets) {
  EXPECT_THROW(ComplexityClassifier::Train({}), ValidationError);
  std::vector<TrainingExample> one_class = {
      {{1, 1, 1, 1, 1}, Complexity::kSimple},
      {{2, 2, 2, 2, 2}, Complexity::kSimple}};
  EXPECT_THROW(ComplexityClassifier::Train(one_class), ValidationError);
}

TEST(ClassifierTest, GradientsMatchFiniteDifferences) {
  testing::GradientCheck check = testing::CheckGradients(1234, 20);
  EXPECT_EQ(check.parameters_checked, 20 * static_cast<int>(kNumParams));
  EXPECT_LT(check.max_relative_error, 1e-4);
}

TEST(ClassifierTest, SerializationRoundTripsBitExactly) {
  ComplexityClassifier c = ComplexityClassifier::Train(
      testing::SeparableSet(8, 150), {.epochs = 15});
  const std::string text = c.Serialize();
  ComplexityClassifier back = ComplexityClassifier::Deserialize(text);
  EXPECT_EQ(back.params(), c.params());
  EXPECT_EQ(back.scaler(), c.scaler());
  EXPECT_EQ(back.Serialize(), text);
  for (const TrainingExample& e : testing::SeparableSet(9, 50)) {
    EXPECT_EQ(back.Predict(e.features).probabilities,
              c.Predict(e.features).probabilities);
  }
  const std::string path =
      (std::filesystem::temp_directory_path() / "simplex_clf_test.mlp").string();
  c.Save(path);
  EXPECT_EQ(ComplexityClassifier::Load(path).params(), c.params());
  std::filesystem::remove(path);
}

TEST(ClassifierTest, RejectsCorruptFiles) {
  const std::string good = ComplexityClassifier().Serialize();
  EXPECT_THROW(ComplexityClassifier::Deserialize(""), ParseError);
  EXPECT_THROW(ComplexityClassifier::Deserialize("SIMPLEX-MLP0\n"), ParseError);
  std::string bad = good;
  bad.replace(bad.find("architecture 5 3 2"), 18, "architecture 5 4 2");
  EXPECT_THROW(ComplexityClassifier::Deserialize(bad), ParseError);
  bad = good;
  bad.replace(bad.find("b2 0 0"), 6, "b2 0 x");
  EXPECT_THROW(ComplexityClassifier::Deserialize(bad), ParseError);
  EXPECT_THROW(ComplexityClassifier::Load("/nonexistent/clf.mlp"), IoError);
}

TEST(ClassifierTest, FixtureClassifierFlagsLongRareWords) {
  ComplexityClassifier c =
      ComplexityClassifier::Load(SIMPLEX_FIXTURE_DIR "/classifier.mlp");
  // Length >= 7 and fewer than 20 occurrences.
  EXPECT_EQ(c.Predict({1e-3, 1, 1, 13, 2}).label, Complexity::kComplex);
  EXPECT_EQ(c.Predict({1e-3, 1, 1, 6, 2}).label, Complexity::kSimple);
  EXPECT_EQ(c.Predict({1e-1, 30, 30, 9, 2}).label, Complexity::kSimple);
  EXPECT_EQ(c.Predict({1e-3, 19, 19, 7, 0}).label, Complexity::kComplex);
}

TEST(LexiconTest, ParsesRatings) {
  auto lex = ParseLexicon("# comment\nVital\t1.5\nindispensable\t4.25\n\n");
  ASSERT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex[0].first, "vital");
  EXPECT_EQ(lex[1].second, 4.25);
  try {
    ParseLexicon("ok\t2\nbad\t7.5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(ParseLexicon("no rating\n"), ParseError);
  EXPECT_THROW(ParseLexicon("w\tabc\n"), ParseError);
}

TEST(LexiconTest, BuildsTrainingSet) {
  const NGramModel m = TinyModel();
  const OfflineThesaurus th = OfflineThesaurus::Parse("");
  std::vector<std::pair<std::string, double>> lex = {{"the", 1.0},
                                                     {"zebra", 3.0}};
  std::vector<TrainingExample> set = BuildTrainingSet(lex, m, th);
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[0].label, Complexity::kSimple);
  EXPECT_EQ(set[1].label, Complexity::kComplex);
  EXPECT_EQ(set[1].features[3], 5);
}

}  // namespace
}  // namespace simplex
