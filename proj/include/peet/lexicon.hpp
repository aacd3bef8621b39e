/*
 * Copyright 2026 The PEET Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "peet/detail/lexicon_data.hpp"
#include "peet/text.hpp"

namespace peet {

/// Coarse part-of-speech tags used by alignment and edit typing.
enum class Pos { ADJ, ADV, CONJ, DET, NOUN, PART, PREP, PRON, PUNCT, VERB, CONTR, OTHER };

inline constexpr std::string_view pos_name(Pos p) {
  switch (p) {
    case Pos::ADJ: return "ADJ";
    case Pos::ADV: return "ADV";
    case Pos::CONJ: return "CONJ";
    case Pos::DET: return "DET";
    case Pos::NOUN: return "NOUN";
    case Pos::PART: return "PART";
    case Pos::PREP: return "PREP";
    case Pos::PRON: return "PRON";
    case Pos::PUNCT: return "PUNCT";
    case Pos::VERB: return "VERB";
    case Pos::CONTR: return "CONTR";
    case Pos::OTHER: return "OTHER";
  }
  return "OTHER";
}

/// Accepts both the coarse names above and Universal Dependencies UPOS tags.
inline std::optional<Pos> parse_pos(std::string_view tag) {
  static const std::unordered_map<std::string_view, Pos> table = {
      {"ADJ", Pos::ADJ},     {"ADV", Pos::ADV},     {"CONJ", Pos::CONJ},   {"CCONJ", Pos::CONJ},
      {"SCONJ", Pos::CONJ},  {"DET", Pos::DET},     {"NOUN", Pos::NOUN},   {"PROPN", Pos::NOUN},
      {"PART", Pos::PART},   {"PREP", Pos::PREP},   {"ADP", Pos::PREP},    {"PRON", Pos::PRON},
      {"PUNCT", Pos::PUNCT}, {"VERB", Pos::VERB},   {"AUX", Pos::VERB},    {"CONTR", Pos::CONTR},
      {"OTHER", Pos::OTHER}, {"NUM", Pos::OTHER},   {"INTJ", Pos::OTHER},  {"SYM", Pos::OTHER},
      {"X", Pos::OTHER},
  };
  const auto it = table.find(tag);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

/// Inflectional form of a verb token, as far as the surface reveals it.
enum class VerbForm { None, Base, Present, Present3sg, Past, PastSingular, PastPlural, Participle, Gerund };

enum class Degree { None, Positive, Comparative, Superlative };

struct Analysis {
  std::string lemma;
  Pos pos = Pos::NOUN;
  VerbForm verb_form = VerbForm::None;
  Degree degree = Degree::None;
  bool plural = false;
  bool possessive = false;
  /// False when the analysis came from suffix guessing rather than the word list.
  bool known = true;
};

namespace lexicon {

namespace detail {

inline bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

inline bool consonant_y(std::string_view w) {
  return w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2]);
}

inline bool sibilant(std::string_view w) {
  return text::ends_with(w, "s") || text::ends_with(w, "x") || text::ends_with(w, "z") ||
         text::ends_with(w, "ch") || text::ends_with(w, "sh");
}

inline std::string plural_or_3sg(std::string_view w) {
  std::string s(w);
  if (consonant_y(w)) return s.substr(0, s.size() - 1) + "ies";
  if (sibilant(w) || text::ends_with(w, "o")) return s + "es";
  return s + "s";
}

/// Short consonant-vowel-consonant adjectives double their final letter.
inline bool doubles_adjective(std::string_view w) {
  if (w.size() < 3 || w.size() > 4) return false;
  const char last = w.back();
  return !is_vowel(last) && last != 'w' && last != 'x' && last != 'y' && is_vowel(w[w.size() - 2]) &&
         !is_vowel(w[w.size() - 3]);
}

class Table {
 public:
  Table() {
    using namespace data;
    for (auto w : kDeterminers) add(w, {std::string(w), Pos::DET});
    for (auto w : kPrepositions) add(w, {std::string(w), Pos::PREP});
    for (auto w : kPronouns) add(w, {std::string(w), Pos::PRON});
    for (auto w : kConjunctions) add(w, {std::string(w), Pos::CONJ});
    for (auto w : kParticles) add(w, {std::string(w), Pos::PART});
    for (auto w : kContractions) add(w, {std::string(w), Pos::CONTR});
    for (auto w : kModals) add(w, verb(w, VerbForm::Base));
    for (const auto& irr : kIrregulars) add_irregular(irr);
    for (auto w : kAdverbs) add(w, {std::string(w), Pos::ADV});
    for (auto w : kAdjectives) {
      Analysis a{std::string(w), Pos::ADJ};
      a.degree = Degree::Positive;
      add(w, a);
    }
    for (auto w : kVerbs) add(w, verb(w, VerbForm::Base));
    for (auto w : kNouns) add(w, {std::string(w), Pos::NOUN});

    for (auto w : kDoublingVerbs) doubling_.emplace(w);
    for (const auto& irr : kIrregulars) {
      if (irr.pos == 'V' && (irr.feature == 'd' || irr.feature == '3')) irregular_past_or_3sg_.emplace(irr.lemma, irr.feature);
      if (irr.pos == 'N') irregular_plural_.emplace(irr.lemma);
      if (irr.pos == 'A') irregular_degree_.emplace(irr.lemma);
    }

    for (auto w : kAdjectives) inflect_adjective(w);
    for (auto w : kVerbs) inflect_verb(w);
    for (auto w : kNouns) inflect_noun(w);
    for (const auto& irr : kIrregulars) {
      if (irr.pos == 'N') add_possessives(irr.form, irr.lemma, true);
    }
  }

  const Analysis* find(std::string_view lower) const {
    const auto it = words_.find(std::string(lower));
    return it == words_.end() ? nullptr : &it->second;
  }

  bool is_base(std::string_view lower, Pos pos) const {
    const auto* a = find(lower);
    return a != nullptr && a->pos == pos && a->lemma == lower;
  }

  bool doubles(std::string_view verb) const { return doubling_.count(std::string(verb)) > 0; }

 private:
  static Analysis verb(std::string_view lemma, VerbForm form) {
    Analysis a{std::string(lemma), Pos::VERB};
    a.verb_form = form;
    return a;
  }

  void add(std::string_view form, Analysis a) { words_.emplace(std::string(form), std::move(a)); }

  void add_irregular(const data::Irregular& irr) {
    Analysis a{std::string(irr.lemma), Pos::NOUN};
    switch (irr.pos) {
      case 'V':
        a.pos = Pos::VERB;
        switch (irr.feature) {
          case 'b': a.verb_form = VerbForm::Base; break;
          case 'p': a.verb_form = VerbForm::Present; break;
          case '3': a.verb_form = VerbForm::Present3sg; break;
          case 'd': a.verb_form = VerbForm::Past; break;
          case 's': a.verb_form = VerbForm::PastSingular; break;
          case 'l': a.verb_form = VerbForm::PastPlural; break;
          case 'n': a.verb_form = VerbForm::Participle; break;
          case 'g': a.verb_form = VerbForm::Gerund; break;
          default: break;
        }
        break;
      case 'N':
        a.pos = Pos::NOUN;
        a.plural = true;
        break;
      case 'A':
        a.pos = Pos::ADJ;
        a.degree = irr.feature == 'c' ? Degree::Comparative : Degree::Superlative;
        break;
      default: break;
    }
    add(irr.form, std::move(a));
  }

  void inflect_noun(std::string_view w) {
    if (irregular_plural_.count(std::string(w)) == 0) {
      Analysis pl{std::string(w), Pos::NOUN};
      pl.plural = true;
      const auto plural = plural_or_3sg(w);
      add(plural, pl);
      add_possessives(plural, w, true);
    }
    add_possessives(w, w, false);
  }

  void add_possessives(std::string_view form, std::string_view lemma, bool plural) {
    Analysis a{std::string(lemma), Pos::NOUN};
    a.plural = plural;
    a.possessive = true;
    if (plural && text::ends_with(form, "s")) {
      add(std::string(form) + "'", a);
    } else {
      add(std::string(form) + "'s", a);
    }
  }

  void inflect_verb(std::string_view w) {
    const std::string base(w);
    const bool irregular_past = irregular_past_or_3sg_.count(std::pair<std::string, char>(base, 'd')) > 0;
    const bool irregular_3sg = irregular_past_or_3sg_.count(std::pair<std::string, char>(base, '3')) > 0;
    if (!irregular_3sg) add(plural_or_3sg(w), verb(w, VerbForm::Present3sg));

    const bool dbl = doubles(w);
    std::string stem = base;
    if (dbl) stem += base.back();

    if (!irregular_past && base != "be") {
      std::string past;
      if (text::ends_with(w, "e")) past = base + "d";
      else if (consonant_y(w)) past = base.substr(0, base.size() - 1) + "ied";
      else past = stem + "ed";
      add(past, verb(w, VerbForm::Past));
    }

    std::string gerund;
    if (text::ends_with(w, "ie")) gerund = base.substr(0, base.size() - 2) + "ying";
    else if (text::ends_with(w, "e") && !text::ends_with(w, "ee") && !text::ends_with(w, "ye") &&
             !text::ends_with(w, "oe") && base.size() > 2)
      gerund = base.substr(0, base.size() - 1) + "ing";
    else gerund = stem + "ing";
    add(gerund, verb(w, VerbForm::Gerund));
  }

  void inflect_adjective(std::string_view w) {
    const std::string base(w);
    if (!text::ends_with(w, "ly")) {
      std::string adverb;
      if (consonant_y(w)) adverb = base.substr(0, base.size() - 1) + "ily";
      else if (text::ends_with(w, "le")) adverb = base.substr(0, base.size() - 1) + "y";
      else if (text::ends_with(w, "ic")) adverb = base + "ally";
      else if (text::ends_with(w, "ll")) adverb = base + "y";
      else adverb = base + "ly";
      add(adverb, {base, Pos::ADV});
    }
    if (irregular_degree_.count(base) > 0) return;
    if (w.size() > 6 && !consonant_y(w)) return;
    std::string comparative, superlative;
    if (text::ends_with(w, "e")) {
      comparative = base + "r";
      superlative = base + "st";
    } else if (consonant_y(w)) {
      comparative = base.substr(0, base.size() - 1) + "ier";
      superlative = base.substr(0, base.size() - 1) + "iest";
    } else if (doubles_adjective(w)) {
      comparative = base + base.back() + "er";
      superlative = base + base.back() + "est";
    } else {
      comparative = base + "er";
      superlative = base + "est";
    }
    Analysis c{base, Pos::ADJ};
    c.degree = Degree::Comparative;
    add(comparative, c);
    Analysis s{base, Pos::ADJ};
    s.degree = Degree::Superlative;
    add(superlative, s);
  }

  struct PairHash {
    std::size_t operator()(const std::pair<std::string, char>& p) const {
      return std::hash<std::string>()(p.first) * 31 + static_cast<std::size_t>(p.second);
    }
  };

  std::unordered_map<std::string, Analysis> words_;
  std::unordered_set<std::string> doubling_;
  std::unordered_set<std::pair<std::string, char>, PairHash> irregular_past_or_3sg_;
  std::unordered_set<std::string> irregular_plural_;
  std::unordered_set<std::string> irregular_degree_;
};

inline const Table& table() {
  static const Table instance;
  return instance;
}

/// Candidate stems for a suffix-stripped word, most specific first.
inline std::vector<std::string> stems(std::string_view w, std::string_view suffix) {
  std::vector<std::string> out;
  if (!text::ends_with(w, suffix) || w.size() <= suffix.size() + 1) return out;
  std::string stem(w.substr(0, w.size() - suffix.size()));
  if (suffix == "ies" || suffix == "ied") {
    out.push_back(stem + "y");
    return out;
  }
  out.push_back(stem);
  if (suffix == "ed" || suffix == "ing" || suffix == "er" || suffix == "est") {
    out.push_back(stem + "e");
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) out.push_back(stem.substr(0, stem.size() - 1));
  }
  return out;
}

}  // namespace detail

/// True when the lowercase word is a listed form (base or generated inflection).
inline bool is_known(std::string_view word) {
  const auto lower = text::to_lower(word);
  if (text::is_punctuation(lower)) return true;
  return detail::table().find(lower) != nullptr;
}

inline bool is_contraction(std::string_view word) {
  const auto lower = text::to_lower(word);
  for (auto c : data::kContractions) {
    if (c == lower) return true;
  }
  return false;
}

/// True when `contraction` can stand for `full` ("n't" / "not").
inline bool expands_to(std::string_view contraction, std::string_view full) {
  const auto c = text::to_lower(contraction);
  const auto f = text::to_lower(full);
  for (const auto& e : data::kExpansions) {
    if (e.contraction == c && e.expansion == f) return true;
  }
  return false;
}

inline bool is_numeric(std::string_view w) {
  bool digit = false;
  for (unsigned char c : w) {
    if (std::isdigit(c)) digit = true;
    else if (c != '.' && c != ',' && c != '-' && c != '/' && c != ':' && c != '%') return false;
  }
  return digit;
}

/// Lemma and POS for one token. Listed forms come from the tables; unlisted
/// words fall back to suffix rules, then to NOUN.
inline Analysis analyze(std::string_view surface) {
  if (text::is_punctuation(surface)) return Analysis{std::string(surface), Pos::PUNCT};
  const auto w = text::to_lower(surface);
  if (is_numeric(w)) return Analysis{w, Pos::OTHER};
  const auto& tab = detail::table();
  if (const auto* hit = tab.find(w)) return *hit;

  Analysis guess{w, Pos::NOUN};
  guess.known = false;

  // possessive of an unlisted plural or singular
  if (text::ends_with(w, "'s") && w.size() > 2) {
    guess.lemma = w.substr(0, w.size() - 2);
    guess.possessive = true;
    return guess;
  }

  const auto first_base = [&](std::string_view suffix, Pos pos) -> std::optional<std::string> {
    for (const auto& s : detail::stems(w, suffix)) {
      if (tab.is_base(s, pos)) return s;
    }
    return std::nullopt;
  };

  // -s / -es: plural noun or 3sg verb, whichever the stem is listed as
  for (auto suffix : {"ies", "es", "s"}) {
    if (!text::ends_with(w, suffix) || text::ends_with(w, "ss")) continue;
    if (auto n = first_base(suffix, Pos::NOUN)) {
      guess.lemma = *n;
      guess.plural = true;
      return guess;
    }
    if (auto v = first_base(suffix, Pos::VERB)) {
      guess.lemma = *v;
      guess.pos = Pos::VERB;
      guess.verb_form = VerbForm::Present3sg;
      return guess;
    }
  }
  for (auto suffix : {"ied", "ed"}) {
    if (!text::ends_with(w, suffix)) continue;
    guess.pos = Pos::VERB;
    guess.verb_form = VerbForm::Past;
    const auto base = first_base(suffix, Pos::VERB);
    guess.lemma = base ? *base : w.substr(0, w.size() - 2);
    return guess;
  }
  if (text::ends_with(w, "ing") && w.size() > 4) {
    guess.pos = Pos::VERB;
    guess.verb_form = VerbForm::Gerund;
    const auto base = first_base("ing", Pos::VERB);
    guess.lemma = base ? *base : w.substr(0, w.size() - 3);
    return guess;
  }
  if (text::ends_with(w, "ly") && w.size() > 3) {
    guess.pos = Pos::ADV;
    return guess;
  }
  for (auto suffix : {"est", "er"}) {
    if (!text::ends_with(w, suffix) || w.size() <= 4) continue;
    guess.pos = Pos::ADJ;
    guess.degree = std::string_view(suffix) == "er" ? Degree::Comparative : Degree::Superlative;
    const auto base = first_base(suffix, Pos::ADJ);
    guess.lemma = base ? *base : w.substr(0, w.size() - std::string_view(suffix).size());
    return guess;
  }
  if (text::ends_with(w, "s") && !text::ends_with(w, "ss") && w.size() > 3) {
    guess.lemma = w.substr(0, w.size() - 1);
    guess.plural = true;
  }
  return guess;
}

}  // namespace lexicon
}  // namespace peet
