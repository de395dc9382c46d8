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

#ifndef SIMPLEX_TRACE_JSON_H_
#define SIMPLEX_TRACE_JSON_H_

#include <string>

#include "simplex/pipeline.h"

namespace simplex {

// Bumped whenever a trace field is renamed, removed or changes meaning.
inline constexpr int kTraceVersion = 1;

// One trace entry:
//   {"position", "original", "probabilities": {"simple", "complex"}, "tag",
//    "lemma", "inflection" (string|null), "fetched", "simple_synonyms",
//    "survivors", "cosine_filter_skipped",
//    "candidates": [{"synonym", "sentence", "score"}],
//    "chosen" (string|null), "chosen_pp" ({"pp1","pp2","combined"}|null),
//    "error" (string|null)}
std::string TraceJson(const ReplacementTrace& trace);

// The /simplify response body, also written per line by `simplify --trace`:
//   {"simplified", "trace": [...], "pp_score" (combined),
//    "pp_components": {"pp1", "pp2"}, "trace_version"}
// Compact, keys in the order above; byte-identical for identical results.
std::string SimplifyResponseJson(const SimplificationResult& result);

}  // namespace simplex

#endif  // SIMPLEX_TRACE_JSON_H_
