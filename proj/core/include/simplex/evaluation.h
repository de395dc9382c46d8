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

#ifndef SIMPLEX_EVALUATION_H_
#define SIMPLEX_EVALUATION_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "simplex/ngram_model.h"
#include "simplex/sentence.h"

namespace simplex {

struct EvaluationRecord {
  Sentence input;
  Sentence output;
  std::vector<Sentence> references;
};

// Per n-gram order components; orders no sentence is long enough for are
// left out.
struct SariBreakdown {
  struct Order {
    int n = 0;
    double add_f1 = 0;
    double keep_f1 = 0;
    double delete_precision = 0;
  };
  std::vector<Order> orders;
  double score = 0;
};

// SARI over n-gram sets of orders 1-4.
//   add:    system O \ I against references (∪R) \ I, F1
//   keep:   system O ∩ I against I ∩ (∩R), F1
//   delete: system I \ O against I \ (∪R), precision only
// A precision (recall) with an empty system (reference) set is 1 when the
// other set is empty too and 0 otherwise. Orders are averaged; the result is
// clamped to [0, 1]. Throws ValidationError without references.
double Sari(const Sentence& input, const Sentence& output,
            std::span<const Sentence> references);
SariBreakdown SariDetail(const Sentence& input, const Sentence& output,
                         std::span<const Sentence> references);

// 100 * (mean_original - mean_simplified) / mean_original over combined
// perplexity scores. Throws ValidationError on empty or unequal lists.
double PerplexityDecrease(const NGramModel& model,
                          std::span<const Sentence> originals,
                          std::span<const Sentence> simplified, double phi);

struct EvaluationReport {
  std::vector<double> sari;  // per record
  double mean_sari = 0;
  double mean_original_pp = 0;
  double mean_simplified_pp = 0;
  double perplexity_decrease = 0;  // percent
};

// Throws ValidationError naming the offending record index.
EvaluationReport EvaluateCorpus(std::span<const EvaluationRecord> records,
                                const NGramModel& model, double phi);

// Aligned files, one sentence per line. Throws ValidationError naming the
// files when line counts differ, IoError / ParseError otherwise.
std::vector<EvaluationRecord> ReadEvaluationRecords(
    const std::string& input_path, const std::string& output_path,
    std::span<const std::string> reference_paths);

}  // namespace simplex

#endif  // SIMPLEX_EVALUATION_H_
