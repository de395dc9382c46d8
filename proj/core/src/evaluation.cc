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

#include "simplex/evaluation.h"

#include <algorithm>
#include <set>
#include <string_view>

#include <fmt/format.h>

#include "simplex/errors.h"
#include "simplex/ranking.h"

namespace simplex {
namespace {

constexpr int kMaxOrder = 4;

using NGram = std::vector<std::string_view>;
using NGramSet = std::set<NGram>;

NGramSet NGrams(const Sentence& s, int n) {
  NGramSet out;
  const auto& t = s.tokens();
  for (size_t i = 0; i + n <= t.size(); ++i) {
    out.emplace(t.begin() + i, t.begin() + i + n);
  }
  return out;
}

NGramSet Intersect(const NGramSet& a, const NGramSet& b) {
  NGramSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

NGramSet Minus(const NGramSet& a, const NGramSet& b) {
  NGramSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

double Ratio(size_t hits, size_t denominator, size_t other) {
  if (denominator == 0) return other == 0 ? 1.0 : 0.0;
  return static_cast<double>(hits) / static_cast<double>(denominator);
}

double Precision(const NGramSet& sys, const NGramSet& ref) {
  return Ratio(Intersect(sys, ref).size(), sys.size(), ref.size());
}

double F1(const NGramSet& sys, const NGramSet& ref) {
  const size_t hits = Intersect(sys, ref).size();
  const double p = Ratio(hits, sys.size(), ref.size());
  const double r = Ratio(hits, ref.size(), sys.size());
  return p + r == 0 ? 0.0 : 2 * p * r / (p + r);
}

}  // namespace

SariBreakdown SariDetail(const Sentence& input, const Sentence& output,
                         std::span<const Sentence> references) {
  if (references.empty()) {
    throw ValidationError("SARI needs at least one reference");
  }
  size_t longest = std::max(input.size(), output.size());
  for (const Sentence& r : references) longest = std::max(longest, r.size());

  SariBreakdown result;
  for (int n = 1; n <= kMaxOrder && static_cast<size_t>(n) <= longest; ++n) {
    const NGramSet in = NGrams(input, n);
    const NGramSet out = NGrams(output, n);
    NGramSet ref_union;
    NGramSet ref_all;
    for (size_t i = 0; i < references.size(); ++i) {
      NGramSet r = NGrams(references[i], n);
      ref_all = i == 0 ? r : Intersect(ref_all, r);
      ref_union.insert(r.begin(), r.end());
    }
    SariBreakdown::Order o;
    o.n = n;
    o.add_f1 = F1(Minus(out, in), Minus(ref_union, in));
    o.keep_f1 = F1(Intersect(out, in), Intersect(in, ref_all));
    o.delete_precision = Precision(Minus(in, out), Minus(in, ref_union));
    result.orders.push_back(o);
  }
  double total = 0;
  for (const auto& o : result.orders) {
    total += (o.add_f1 + o.keep_f1 + o.delete_precision) / 3.0;
  }
  result.score = std::clamp(total / static_cast<double>(result.orders.size()),
                            0.0, 1.0);
  return result;
}

double Sari(const Sentence& input, const Sentence& output,
            std::span<const Sentence> references) {
  return SariDetail(input, output, references).score;
}

namespace {

double MeanScore(const NGramModel& model, std::span<const Sentence> sentences,
                 double phi) {
  double sum = 0;
  for (const Sentence& s : sentences) sum += PpScore(model, s, phi).combined;
  return sum / static_cast<double>(sentences.size());
}

}  // namespace

double PerplexityDecrease(const NGramModel& model,
                          std::span<const Sentence> originals,
                          std::span<const Sentence> simplified, double phi) {
  ValidatePhi(phi);
  if (originals.empty() || originals.size() != simplified.size()) {
    throw ValidationError(fmt::format(
        "perplexity decrease needs equal non-empty lists ({} vs {})",
        originals.size(), simplified.size()));
  }
  const double before = MeanScore(model, originals, phi);
  const double after = MeanScore(model, simplified, phi);
  return 100.0 * (before - after) / before;
}

EvaluationReport EvaluateCorpus(std::span<const EvaluationRecord> records,
                                const NGramModel& model, double phi) {
  ValidatePhi(phi);
  if (records.empty()) throw ValidationError("no evaluation records");
  EvaluationReport report;
  std::vector<Sentence> originals, outputs;
  for (size_t i = 0; i < records.size(); ++i) {
    const EvaluationRecord& r = records[i];
    if (r.references.empty()) {
      throw ValidationError(fmt::format("record {} has no references", i));
    }
    report.sari.push_back(Sari(r.input, r.output, r.references));
    originals.push_back(r.input);
    outputs.push_back(r.output);
  }
  double sum = 0;
  for (double s : report.sari) sum += s;
  report.mean_sari = sum / static_cast<double>(report.sari.size());
  report.mean_original_pp = MeanScore(model, originals, phi);
  report.mean_simplified_pp = MeanScore(model, outputs, phi);
  report.perplexity_decrease =
      PerplexityDecrease(model, originals, outputs, phi);
  return report;
}

std::vector<EvaluationRecord> ReadEvaluationRecords(
    const std::string& input_path, const std::string& output_path,
    std::span<const std::string> reference_paths) {
  if (reference_paths.empty()) {
    throw ValidationError("at least one reference file is required");
  }
  const std::vector<Sentence> inputs = ReadAlignedSentences(input_path);
  const std::vector<Sentence> outputs = ReadAlignedSentences(output_path);
  auto check = [&](const std::string& path, size_t lines) {
    if (lines != inputs.size()) {
      throw ValidationError(fmt::format("{} has {} lines but {} has {}", path,
                                        lines, input_path, inputs.size()));
    }
  };
  check(output_path, outputs.size());
  std::vector<std::vector<Sentence>> refs;
  for (const std::string& path : reference_paths) {
    refs.push_back(ReadAlignedSentences(path));
    check(path, refs.back().size());
  }
  std::vector<EvaluationRecord> records;
  records.reserve(inputs.size());
  for (size_t i = 0; i < inputs.size(); ++i) {
    EvaluationRecord& record =
        records.emplace_back(EvaluationRecord{inputs[i], outputs[i], {}});
    for (const auto& r : refs) record.references.push_back(r[i]);
  }
  return records;
}

}  // namespace simplex
