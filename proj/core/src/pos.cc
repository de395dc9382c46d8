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

#include "simplex/pos.h"

#include <string>

#include "string_util.h"

namespace simplex {

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun:
      return "noun";
    case PosTag::kVerb:
      return "verb";
    case PosTag::kAdjective:
      return "adj";
    case PosTag::kAdverb:
      return "adv";
    case PosTag::kOther:
      return "other";
  }
  return "other";
}

std::optional<PosTag> ParsePosTag(std::string_view name) {
  const std::string lower = internal::AsciiLower(name);
  if (lower == "noun" || lower == "n") return PosTag::kNoun;
  if (lower == "verb" || lower == "v") return PosTag::kVerb;
  if (lower == "adj" || lower == "adjective" || lower == "a") {
    return PosTag::kAdjective;
  }
  if (lower == "adv" || lower == "adverb" || lower == "r") {
    return PosTag::kAdverb;
  }
  if (lower == "other") return PosTag::kOther;
  return std::nullopt;
}

}  // namespace simplex
