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

#include "simplex/morphology.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <unordered_set>

#include <fmt/format.h>

#include "simplex/errors.h"
#include "simplex/thesaurus.h"
#include "string_util.h"

namespace simplex {
namespace {

constexpr std::string_view kVowels = "aeiou";

bool EndsWith(std::string_view w, std::string_view suffix) {
  return w.ends_with(suffix);
}

bool IsVowelChar(char c) { return kVowels.find(c) != std::string_view::npos; }

// Vowel at position i, treating the 'u' of "qu" as a consonant and a 'y'
// after a consonant as a vowel.
bool IsVowelAt(std::string_view w, size_t i) {
  const char c = w[i];
  if (IsVowelChar(c)) return !(c == 'u' && i > 0 && w[i - 1] == 'q');
  return c == 'y' && i > 0 && !IsVowelChar(w[i - 1]);
}

int VowelGroups(std::string_view w) {
  int groups = 0;
  bool prev = false;
  for (size_t i = 0; i < w.size(); ++i) {
    const bool vowel = IsVowelAt(w, i);
    if (vowel && !prev) ++groups;
    prev = vowel;
  }
  return groups;
}

bool EndsWithConsonantY(std::string_view w) {
  return w.size() > 1 && w.back() == 'y' && !IsVowelChar(w[w.size() - 2]);
}

bool EndsWithSibilant(std::string_view w) {
  return EndsWith(w, "s") || EndsWith(w, "x") ||
         EndsWith(w, "z") || EndsWith(w, "ch") ||
         EndsWith(w, "sh");
}

std::string Cat(std::string_view a, std::string_view b) {
  std::string out(a);
  out.append(b);
  return out;
}

std::string Drop(std::string_view w, size_t n) {
  return std::string(w.substr(0, w.size() - n));
}

int DegreeIndex(PosTag tag) { return tag == PosTag::kAdverb ? 1 : 0; }

PosTag BaseFormTag(Inflection inflection) {
  switch (inflection) {
    case Inflection::kBase:
    case Inflection::kThirdSingular:
    case Inflection::kPresentParticiple:
    case Inflection::kPastParticiple:
    case Inflection::kPast:
      return PosTag::kVerb;
    case Inflection::kSingular:
    case Inflection::kPlural:
      return PosTag::kNoun;
    case Inflection::kPositive:
    case Inflection::kComparative:
    case Inflection::kSuperlative:
      return PosTag::kAdjective;
  }
  return PosTag::kOther;
}

// Marked (non-base) inflections of a POS in the order InferInflection
// prefers them.
std::vector<Inflection> MarkedInflections(PosTag tag) {
  switch (tag) {
    case PosTag::kVerb:
      return {Inflection::kThirdSingular, Inflection::kPresentParticiple,
              Inflection::kPastParticiple, Inflection::kPast};
    case PosTag::kNoun:
      return {Inflection::kPlural};
    case PosTag::kAdjective:
    case PosTag::kAdverb:
      return {Inflection::kComparative, Inflection::kSuperlative};
    case PosTag::kOther:
      break;
  }
  return {};
}

Inflection UnmarkedInflection(PosTag tag) {
  switch (tag) {
    case PosTag::kVerb:
      return Inflection::kBase;
    case PosTag::kNoun:
      return Inflection::kSingular;
    default:
      return Inflection::kPositive;
  }
}

using Row = std::vector<std::string>;

void ReadTable(const std::filesystem::path& path, size_t columns,
               const std::function<void(const Row&)>& sink) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = internal::StripTrailing(line);
    if (view.empty() || view.front() == '#') continue;
    Row row;
    for (std::string_view field : internal::Split(view, '\t')) {
      row.emplace_back(field);
    }
    if (row.size() != columns) {
      throw ParseError(fmt::format("{}:{}: expected {} fields", path.string(),
                                   line_number, columns),
                       line_number);
    }
    try {
      sink(row);
    } catch (const ParseError& e) {
      throw ParseError(
          fmt::format("{}:{}: {}", path.string(), line_number, e.what()),
          line_number);
    }
  }
}

const std::unordered_set<std::string_view>& VerbCues() {
  static const auto* cues = new std::unordered_set<std::string_view>{
      "to",  "will", "would", "can", "could", "shall", "should", "may",
      "might", "must", "do",  "does", "did", "i",    "you",   "he",
      "she", "it",   "we",  "they", "who"};
  return *cues;
}

const std::unordered_set<std::string_view>& Auxiliaries() {
  static const auto* aux = new std::unordered_set<std::string_view>{
      "is", "are", "was", "were", "be", "been", "being", "am", "has", "have",
      "had"};
  return *aux;
}

const std::unordered_set<std::string_view>& Determiners() {
  static const auto* det = new std::unordered_set<std::string_view>{
      "the",  "a",    "an",  "this", "these", "those", "his",  "her",
      "its",  "their", "our", "your", "my",   "some",  "any",  "each",
      "every", "no"};
  return *det;
}

bool Has(const std::vector<PosTag>& tags, PosTag tag) {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

}  // namespace

bool InflectionAppliesTo(Inflection inflection, PosTag tag) {
  const PosTag base = BaseFormTag(inflection);
  if (base == PosTag::kAdjective) {
    return tag == PosTag::kAdjective || tag == PosTag::kAdverb;
  }
  return base == tag;
}

std::string_view InflectionName(Inflection inflection) {
  switch (inflection) {
    case Inflection::kBase:
      return "base";
    case Inflection::kThirdSingular:
      return "third";
    case Inflection::kPresentParticiple:
      return "present_participle";
    case Inflection::kPastParticiple:
      return "past_participle";
    case Inflection::kPast:
      return "past";
    case Inflection::kSingular:
      return "singular";
    case Inflection::kPlural:
      return "plural";
    case Inflection::kPositive:
      return "positive";
    case Inflection::kComparative:
      return "comparative";
    case Inflection::kSuperlative:
      return "superlative";
  }
  return "base";
}

std::optional<Inflection> ParseInflection(std::string_view name) {
  for (Inflection i :
       {Inflection::kBase, Inflection::kThirdSingular,
        Inflection::kPresentParticiple, Inflection::kPastParticiple,
        Inflection::kPast, Inflection::kSingular, Inflection::kPlural,
        Inflection::kPositive, Inflection::kComparative,
        Inflection::kSuperlative}) {
    if (InflectionName(i) == name) return i;
  }
  return std::nullopt;
}

Morphology Morphology::Load(const std::string& data_dir) {
  const std::filesystem::path dir(data_dir);
  Morphology m;

  ReadTable(dir / "tag_lexicon.tsv", 2, [&](const Row& row) {
        std::vector<PosTag> tags;
        for (std::string_view name : internal::Split(row[1], ',')) {
          std::optional<PosTag> tag = ParsePosTag(name);
          if (!tag) throw ParseError("unknown tag");
          tags.push_back(*tag);
          if (*tag != PosTag::kOther) m.AddBaseForm(row[0], *tag);
        }
        m.lexicon_[row[0]] = std::move(tags);
      });

  auto column = [](const std::string& s) { return s == "-" ? "" : s; };
  ReadTable(dir / "irregular_verbs.tsv", 5, [&](const Row& row) {
        VerbForms forms{column(row[1]), column(row[2]), column(row[3]),
                        column(row[4])};
        for (const std::string* s :
             {&forms.past, &forms.past_participle, &forms.third,
              &forms.present_participle}) {
          if (!s->empty()) m.verb_surface_[*s] = row[0];
        }
        m.verbs_[row[0]] = std::move(forms);
        m.AddBaseForm(row[0], PosTag::kVerb);
      });

  ReadTable(dir / "irregular_nouns.tsv", 2, [&](const Row& row) {
    m.plural_of_[row[0]] = row[1];
    m.singular_of_[row[1]] = row[0];
    m.AddBaseForm(row[0], PosTag::kNoun);
  });

  ReadTable(dir / "irregular_degrees.tsv", 4, [&](const Row& row) {
        std::optional<PosTag> tag = ParsePosTag(row[1]);
        if (!tag || (*tag != PosTag::kAdjective && *tag != PosTag::kAdverb)) {
          throw ParseError("degree pos must be adj or adv");
        }
        const int idx = DegreeIndex(*tag);
        m.degrees_[idx][row[0]] = DegreeForms{row[2], row[3]};
        m.degree_surface_[idx][row[2]] = row[0];
        m.degree_surface_[idx][row[3]] = row[0];
        m.AddBaseForm(row[0], *tag);
      });

  ReadTable(dir / "doubling.tsv", 1,
            [&](const Row& row) { m.doubling_.insert(row[0]); });
  return m;
}

void Morphology::AddBaseForms(const OfflineThesaurus& thesaurus) {
  for (const ThesaurusEntry& entry : thesaurus.Entries()) {
    AddBaseForm(entry.lemma, entry.pos);
    for (const std::string& syn : entry.synonyms) AddBaseForm(syn, entry.pos);
  }
}

void Morphology::AddBaseForm(std::string_view word, PosTag tag) {
  known_[static_cast<int>(tag)].emplace(word);
}

bool Morphology::IsKnown(std::string_view word, PosTag tag) const {
  return known_[static_cast<int>(tag)].contains(word);
}

bool Morphology::ShouldDouble(std::string_view w) const {
  if (doubling_.contains(w)) return true;
  if (w.size() < 3 || VowelGroups(w) != 1) return false;
  const size_t n = w.size();
  const char a = w[n - 3], b = w[n - 2], c = w[n - 1];
  if (c == 'w' || c == 'x' || c == 'y' || IsVowelChar(c)) return false;
  if (!IsVowelChar(b)) return false;
  if (IsVowelChar(a) && !(a == 'u' && n > 3 && w[n - 4] == 'q')) return false;
  return true;
}

std::string Morphology::RegularForm(std::string_view w,
                                    Inflection inflection) const {
  switch (inflection) {
    case Inflection::kThirdSingular:
      if (EndsWithConsonantY(w)) return Drop(w, 1) + "ies";
      if (EndsWithSibilant(w) || EndsWith(w, "o")) {
        return Cat(w, "es");
      }
      return Cat(w, "s");
    case Inflection::kPast:
    case Inflection::kPastParticiple:
      if (EndsWith(w, "e")) return Cat(w, "d");
      if (EndsWithConsonantY(w)) return Drop(w, 1) + "ied";
      if (ShouldDouble(w)) return Cat(w, w.substr(w.size() - 1)) + "ed";
      return Cat(w, "ed");
    case Inflection::kPresentParticiple:
      if (EndsWith(w, "ie")) return Drop(w, 2) + "ying";
      if (EndsWith(w, "e") && !EndsWith(w, "ee") &&
          !EndsWith(w, "ye") && !EndsWith(w, "oe") &&
          w.size() > 2) {
        return Drop(w, 1) + "ing";
      }
      if (ShouldDouble(w)) {
        return Cat(w, w.substr(w.size() - 1)) + "ing";
      }
      return Cat(w, "ing");
    case Inflection::kPlural:
      if (EndsWithConsonantY(w)) return Drop(w, 1) + "ies";
      if (EndsWithSibilant(w)) return Cat(w, "es");
      return Cat(w, "s");
    case Inflection::kComparative:
    case Inflection::kSuperlative: {
      const std::string_view suffix =
          inflection == Inflection::kComparative ? "er" : "est";
      if (EndsWith(w, "e")) return Cat(w, suffix.substr(1));
      if (EndsWithConsonantY(w)) return Cat(Drop(w, 1) + "i", suffix);
      if (ShouldDouble(w)) return Cat(Cat(w, w.substr(w.size() - 1)), suffix);
      return Cat(w, suffix);
    }
    case Inflection::kBase:
    case Inflection::kSingular:
    case Inflection::kPositive:
      break;
  }
  return std::string(w);
}

std::string Morphology::Inflect(std::string_view lemma,
                                Inflection inflection) const {
  if (lemma.empty()) return std::string(lemma);
  switch (inflection) {
    case Inflection::kBase:
    case Inflection::kSingular:
    case Inflection::kPositive:
      return std::string(lemma);
    case Inflection::kThirdSingular:
    case Inflection::kPresentParticiple:
    case Inflection::kPastParticiple:
    case Inflection::kPast:
      if (auto it = verbs_.find(lemma); it != verbs_.end()) {
        const VerbForms& f = it->second;
        const std::string& form =
            inflection == Inflection::kThirdSingular       ? f.third
            : inflection == Inflection::kPresentParticiple ? f.present_participle
            : inflection == Inflection::kPastParticiple    ? f.past_participle
                                                           : f.past;
        if (!form.empty()) return form;
      }
      break;
    case Inflection::kPlural:
      if (auto it = plural_of_.find(lemma); it != plural_of_.end()) {
        return it->second;
      }
      break;
    case Inflection::kComparative:
    case Inflection::kSuperlative:
      for (const auto& table : degrees_) {
        if (auto it = table.find(lemma); it != table.end()) {
          return inflection == Inflection::kComparative
                     ? it->second.comparative
                     : it->second.superlative;
        }
      }
      break;
  }
  return RegularForm(lemma, inflection);
}

std::optional<std::string> Morphology::IrregularLemma(std::string_view word,
                                                      PosTag tag) const {
  const StringMap<std::string>* table = nullptr;
  switch (tag) {
    case PosTag::kVerb:
      table = &verb_surface_;
      break;
    case PosTag::kNoun:
      table = &singular_of_;
      break;
    case PosTag::kAdjective:
    case PosTag::kAdverb:
      table = &degree_surface_[DegreeIndex(tag)];
      break;
    case PosTag::kOther:
      return std::nullopt;
  }
  auto it = table->find(word);
  if (it == table->end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Morphology::BaseCandidates(std::string_view w,
                                                    PosTag tag) const {
  std::vector<std::string> out;
  auto add = [&](std::string c) {
    if (!c.empty() && std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(std::move(c));
    }
  };
  auto undouble = [&](size_t suffix) {
    if (w.size() >= suffix + 2 && w[w.size() - suffix - 1] == w[w.size() - suffix - 2]) {
      add(Drop(w, suffix + 1));
    }
  };
  switch (tag) {
    case PosTag::kVerb:
      if (EndsWith(w, "ies") || EndsWith(w, "ied")) {
        add(Drop(w, 3) + "y");
      }
      if (EndsWith(w, "ying")) add(Drop(w, 4) + "ie");
      if (EndsWith(w, "es")) add(Drop(w, 2));
      if (EndsWith(w, "s")) add(Drop(w, 1));
      if (EndsWith(w, "ed")) {
        add(Drop(w, 1));
        add(Drop(w, 2));
        undouble(2);
      }
      if (EndsWith(w, "ing")) {
        add(Drop(w, 3) + "e");
        add(Drop(w, 3));
        undouble(3);
      }
      break;
    case PosTag::kNoun:
      if (EndsWith(w, "ies")) add(Drop(w, 3) + "y");
      if (EndsWith(w, "ves")) {
        add(Drop(w, 3) + "f");
        add(Drop(w, 3) + "fe");
      }
      if (EndsWith(w, "es")) add(Drop(w, 2));
      if (EndsWith(w, "s")) add(Drop(w, 1));
      break;
    case PosTag::kAdjective:
    case PosTag::kAdverb:
      if (EndsWith(w, "ier")) add(Drop(w, 3) + "y");
      if (EndsWith(w, "iest")) add(Drop(w, 4) + "y");
      if (EndsWith(w, "er")) {
        add(Drop(w, 1));
        add(Drop(w, 2));
        undouble(2);
      }
      if (EndsWith(w, "est")) {
        add(Drop(w, 2));
        add(Drop(w, 3));
        undouble(3);
      }
      break;
    case PosTag::kOther:
      break;
  }
  return out;
}

bool Morphology::Reproduces(std::string_view lemma, std::string_view word,
                            PosTag tag) const {
  for (Inflection i : MarkedInflections(tag)) {
    if (Inflect(lemma, i) == word) return true;
  }
  return false;
}

std::string Morphology::Lemmatize(std::string_view word, PosTag tag) const {
  if (tag == PosTag::kOther) return std::string(word);
  if (std::optional<std::string> lemma = IrregularLemma(word, tag)) {
    return *lemma;
  }
  if (IsKnown(word, tag)) return std::string(word);
  const std::vector<std::string> candidates = BaseCandidates(word, tag);
  for (const std::string& c : candidates) {
    if (IsKnown(c, tag) && Reproduces(c, word, tag)) return c;
  }
  for (const std::string& c : candidates) {
    if (Reproduces(c, word, tag)) return c;
  }
  return std::string(word);
}

std::optional<Inflection> Morphology::InferInflection(std::string_view word,
                                                      PosTag tag) const {
  if (tag == PosTag::kOther) return std::nullopt;
  const std::string lemma = Lemmatize(word, tag);
  if (lemma != word) {
    for (Inflection i : MarkedInflections(tag)) {
      if (Inflect(lemma, i) == word) return i;
    }
  }
  return UnmarkedInflection(tag);
}

std::vector<PosTag> Morphology::CandidateTags(std::string_view word) const {
  if (std::none_of(word.begin(), word.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
      })) {
    return {PosTag::kOther};
  }
  if (auto it = lexicon_.find(word); it != lexicon_.end()) return it->second;

  std::vector<PosTag> tags;
  for (PosTag tag : kOpenClassTags) {
    if (IsKnown(word, tag) || IrregularLemma(word, tag).has_value()) {
      tags.push_back(tag);
      continue;
    }
    for (const std::string& c : BaseCandidates(word, tag)) {
      if (IsKnown(c, tag) && Reproduces(c, word, tag)) {
        tags.push_back(tag);
        break;
      }
    }
  }
  if (!tags.empty()) return tags;

  if (EndsWith(word, "ly")) return {PosTag::kAdverb};
  if (EndsWith(word, "ous") || EndsWith(word, "al") ||
      EndsWith(word, "ive")) {
    return {PosTag::kAdjective};
  }
  if (EndsWith(word, "ed") || EndsWith(word, "ing")) {
    return {PosTag::kVerb};
  }
  return {PosTag::kNoun};
}

std::vector<PosTag> Morphology::Tag(const Sentence& sentence) const {
  std::vector<PosTag> tags;
  tags.reserve(sentence.size());
  for (size_t i = 0; i < sentence.size(); ++i) {
    const std::string& word = sentence[i];
    std::vector<PosTag> candidates = CandidateTags(word);
    PosTag chosen = candidates.front();
    if (candidates.size() > 1 && i > 0) {
      const std::string& prev = sentence[i - 1];
      const PosTag prev_tag = tags.back();
      if (VerbCues().contains(prev) && Has(candidates, PosTag::kVerb)) {
        chosen = PosTag::kVerb;
      } else if (Auxiliaries().contains(prev)) {
        const bool inflected = Lemmatize(word, PosTag::kVerb) != word;
        if (Has(candidates, PosTag::kVerb) && inflected) {
          chosen = PosTag::kVerb;
        } else if (Has(candidates, PosTag::kAdjective)) {
          chosen = PosTag::kAdjective;
        } else if (Has(candidates, PosTag::kVerb)) {
          chosen = PosTag::kVerb;
        }
      } else if (Determiners().contains(prev) ||
                 prev_tag == PosTag::kAdjective) {
        if (Has(candidates, PosTag::kNoun)) {
          chosen = PosTag::kNoun;
        } else if (Has(candidates, PosTag::kAdjective)) {
          chosen = PosTag::kAdjective;
        }
      }
    }
    tags.push_back(chosen);
  }
  return tags;
}

Sentence AgreeArticle(const Sentence& sentence, size_t k) {
  if (k == 0 || k >= sentence.size()) return sentence;
  const std::string& prev = sentence[k - 1];
  if (prev != "a" && prev != "an") return sentence;
  const std::string wanted = IsVowelChar(sentence[k].front()) ? "an" : "a";
  if (prev == wanted) return sentence;
  return sentence.WithToken(k - 1, wanted);
}

}  // namespace simplex
