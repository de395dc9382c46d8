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

#include "simplex/trace_json.h"

#include "json.hpp"

namespace simplex {
namespace {

using Json = nlohmann::ordered_json;

Json ToJson(const ReplacementTrace& t) {
  Json candidates = Json::array();
  for (const CandidateScore& c : t.candidates) {
    candidates.push_back(
        {{"synonym", c.synonym}, {"sentence", c.sentence}, {"score", c.score}});
  }
  Json j;
  j["position"] = t.position;
  j["original"] = t.original;
  j["probabilities"] = {{"simple", t.probabilities[0]},
                        {"complex", t.probabilities[1]}};
  j["tag"] = PosTagName(t.tag);
  j["lemma"] = t.lemma;
  j["inflection"] =
      t.inflection ? Json(InflectionName(*t.inflection)) : Json(nullptr);
  j["fetched"] = t.fetched;
  j["simple_synonyms"] = t.simple_synonyms;
  j["survivors"] = t.survivors;
  j["cosine_filter_skipped"] = t.cosine_filter_skipped;
  j["candidates"] = std::move(candidates);
  j["chosen"] = t.chosen ? Json(*t.chosen) : Json(nullptr);
  j["chosen_pp"] = t.chosen_pp ? Json{{"pp1", t.chosen_pp->pp1},
                                      {"pp2", t.chosen_pp->pp2},
                                      {"combined", t.chosen_pp->combined}}
                               : Json(nullptr);
  j["error"] = t.error.empty() ? Json(nullptr) : Json(t.error);
  return j;
}

}  // namespace

std::string TraceJson(const ReplacementTrace& trace) {
  return ToJson(trace).dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::string SimplifyResponseJson(const SimplificationResult& result) {
  Json traces = Json::array();
  for (const ReplacementTrace& t : result.traces) traces.push_back(ToJson(t));
  Json j;
  j["simplified"] = result.output.ToString();
  j["trace"] = std::move(traces);
  j["pp_score"] = result.pp_score.combined;
  j["pp_components"] = {{"pp1", result.pp_score.pp1},
                        {"pp2", result.pp_score.pp2}};
  j["trace_version"] = kTraceVersion;
  // Invalid UTF-8 in user text is replaced rather than thrown on.
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace simplex
