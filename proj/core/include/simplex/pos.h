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

#ifndef SIMPLEX_POS_H_
#define SIMPLEX_POS_H_

#include <optional>
#include <string_view>

namespace simplex {

enum class PosTag { kNoun, kVerb, kAdjective, kAdverb, kOther };

inline constexpr PosTag kOpenClassTags[] = {PosTag::kNoun, PosTag::kVerb,
                                            PosTag::kAdjective,
                                            PosTag::kAdverb};

// "noun", "verb", "adj", "adv", "other".
std::string_view PosTagName(PosTag tag);

// Accepts the names above case-insensitively, plus "adjective" and "adverb".
std::optional<PosTag> ParsePosTag(std::string_view name);

}  // namespace simplex

#endif  // SIMPLEX_POS_H_
