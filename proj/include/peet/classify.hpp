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

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "peet/align.hpp"
#include "peet/annotate.hpp"
#include "peet/corpus_io.hpp"
#include "peet/lexicon.hpp"

namespace peet {

enum class EditCategory { R, M, U };

inline constexpr std::array<EditCategory, 3> kCategories = {EditCategory::R, EditCategory::M, EditCategory::U};

inline constexpr std::string_view category_name(EditCategory c) {
  switch (c) {
    case EditCategory::R: return "R";
    case EditCategory::M: return "M";
    case EditCategory::U: return "U";
  }
  return "R";
}

enum class EditType {
  ADJ, ADJ_FORM, ADV, CONJ, CONTR, DET, MORPH, NOUN, NOUN_INFL, NOUN_NUM, NOUN_POSS, ORTH,
  OTHER, PART, PREP, PRON, PUNCT, SPELL, VERB, VERB_FORM, VERB_INFL, VERB_SVA, VERB_TENSE, WO,
};

inline constexpr std::array<EditType, 24> kEditTypes = {
    EditType::ADJ,        EditType::ADJ_FORM,  EditType::ADV,       EditType::CONJ,      EditType::CONTR,
    EditType::DET,        EditType::MORPH,     EditType::NOUN,      EditType::NOUN_INFL, EditType::NOUN_NUM,
    EditType::NOUN_POSS,  EditType::ORTH,      EditType::OTHER,     EditType::PART,      EditType::PREP,
    EditType::PRON,       EditType::PUNCT,     EditType::SPELL,     EditType::VERB,      EditType::VERB_FORM,
    EditType::VERB_INFL,  EditType::VERB_SVA,  EditType::VERB_TENSE, EditType::WO,
};

inline constexpr std::string_view type_name(EditType t) {
  constexpr std::array<std::string_view, 24> names = {
      "ADJ",  "ADJ:FORM", "ADV",   "CONJ",  "CONTR", "DET",   "MORPH", "NOUN",      "NOUN:INFL", "NOUN:NUM",
      "NOUN:POSS", "ORTH", "OTHER", "PART", "PREP", "PRON", "PUNCT", "SPELL", "VERB", "VERB:FORM",
      "VERB:INFL", "VERB:SVA", "VERB:TENSE", "WO",
  };
  return names[static_cast<std::size_t>(t)];
}

inline std::optional<EditType> parse_type(std::string_view name) {
  for (auto t : kEditTypes) {
    if (type_name(t) == name) return t;
  }
  return std::nullopt;
}

struct Edit {
  EditSpan span;
  EditCategory category = EditCategory::R;
  EditType type = EditType::OTHER;

  std::string label() const { return std::string(category_name(category)) + ":" + std::string(type_name(type)); }

  std::string correction() const {
    std::vector<std::string_view> words;
    for (const auto& t : span.trg_tokens) words.push_back(t.surface);
    return text::join(words, " ");
  }

  bool operator==(const Edit&) const = default;
};

inline EditCategory categorize(const EditSpan& span) {
  if (span.src.empty()) return EditCategory::M;
  if (span.trg.empty()) return EditCategory::U;
  return EditCategory::R;
}

namespace detail {

using Tokens = std::vector<AnnotatedToken>;

inline std::vector<std::string> lowered(const Tokens& side) {
  std::vector<std::string> out;
  out.reserve(side.size());
  for (const auto& t : side) out.push_back(text::to_lower(t.surface));
  return out;
}

inline bool all_punct(const Tokens& side) {
  return !side.empty() && std::all_of(side.begin(), side.end(), [](const AnnotatedToken& t) {
    return t.pos == Pos::PUNCT || text::is_punctuation(t.surface);
  });
}

inline bool is_punct_token(const AnnotatedToken& t) { return t.pos == Pos::PUNCT || text::is_punctuation(t.surface); }

inline bool same_lemma(const AnnotatedToken& a, const AnnotatedToken& b) {
  return text::to_lower(a.lemma) == text::to_lower(b.lemma);
}

inline bool is_known(const AnnotatedToken& t) { return lexicon::is_known(t.surface); }

inline bool rule_punct(const Tokens& o, const Tokens& c) {
  if ((o.empty() || all_punct(o)) && (c.empty() || all_punct(c))) return true;
  const bool any_punct = std::any_of(o.begin(), o.end(), is_punct_token) || std::any_of(c.begin(), c.end(), is_punct_token);
  if (!any_punct) return false;
  std::vector<std::string> ow, cw;
  for (const auto& t : o) {
    if (!is_punct_token(t)) ow.push_back(text::to_lower(t.surface));
  }
  for (const auto& t : c) {
    if (!is_punct_token(t)) cw.push_back(text::to_lower(t.surface));
  }
  return ow == cw;
}

inline bool rule_orth(const Tokens& o, const Tokens& c) {
  if (o.empty() || c.empty()) return false;
  return text::join(lowered(o), "") == text::join(lowered(c), "");
}

inline bool rule_word_order(const Tokens& o, const Tokens& c) {
  if (o.size() < 2 || o.size() != c.size()) return false;
  auto a = lowered(o), b = lowered(c);
  if (a == b) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool rule_contraction(const Tokens& o, const Tokens& c) {
  auto contractions_only = [](const Tokens& side) {
    return !side.empty() && std::all_of(side.begin(), side.end(),
                                         [](const AnnotatedToken& t) { return lexicon::is_contraction(t.surface); });
  };
  if (o.empty()) return contractions_only(c);
  if (c.empty()) return contractions_only(o);
  auto one_way = [](const Tokens& with_contraction, const Tokens& with_expansion) {
    const auto a = lowered(with_contraction);
    const auto b = lowered(with_expansion);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (!lexicon::expands_to(a[i], b[k])) continue;
        auto ra = a, rb = b;
        ra.erase(ra.begin() + static_cast<std::ptrdiff_t>(i));
        rb.erase(rb.begin() + static_cast<std::ptrdiff_t>(k));
        if (ra == rb) return true;
      }
    }
    return false;
  };
  return one_way(o, c) || one_way(c, o);
}

inline bool is_possessive_marker(const AnnotatedToken& t) { return t.surface == "'s" || t.surface == "'"; }

/// Noun possessive/number/inflection, or nullopt when the span is not a
/// same-lemma noun pair.
inline std::optional<EditType> rule_noun(const Tokens& o, const Tokens& c) {
  auto strip = [](const Tokens& side, bool& marker) {
    Tokens out;
    for (const auto& t : side) {
      if (is_possessive_marker(t)) marker = true;
      else out.push_back(t);
    }
    return out;
  };
  bool o_marker = false, c_marker = false;
  const auto os = strip(o, o_marker);
  const auto cs = strip(c, c_marker);
  if (os.size() != 1 || cs.size() != 1) return std::nullopt;
  const auto& a = os.front();
  const auto& b = cs.front();
  if (a.pos != Pos::NOUN || b.pos != Pos::NOUN || !same_lemma(a, b)) return std::nullopt;
  const auto aa = lexicon::analyze(a.surface);
  const auto ba = lexicon::analyze(b.surface);
  if ((o_marker || aa.possessive) != (c_marker || ba.possessive)) return EditType::NOUN_POSS;
  if (o.size() != 1 || c.size() != 1) return std::nullopt;
  if (aa.plural != ba.plural) return EditType::NOUN_NUM;
  if (!is_known(a)) return EditType::NOUN_INFL;
  return std::nullopt;
}

inline bool present_like(VerbForm f) {
  return f == VerbForm::Base || f == VerbForm::Present || f == VerbForm::Present3sg;
}

inline std::optional<EditType> rule_verb(const Tokens& o, const Tokens& c) {
  auto verbal = [](const Tokens& side) {
    return std::all_of(side.begin(), side.end(), [](const AnnotatedToken& t) {
      return t.pos == Pos::VERB || text::to_lower(t.surface) == "to";
    });
  };
  auto head = [](const Tokens& side) -> const AnnotatedToken* {
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
      if (it->pos == Pos::VERB) return &*it;
    }
    return nullptr;
  };
  auto has_to = [](const Tokens& side) {
    return std::any_of(side.begin(), side.end(), [](const AnnotatedToken& t) { return text::to_lower(t.surface) == "to"; });
  };
  if (!verbal(o) || !verbal(c)) return std::nullopt;
  const auto* a = head(o);
  const auto* b = head(c);
  if (a == nullptr || b == nullptr || !same_lemma(*a, *b)) return std::nullopt;

  if (!is_known(*a)) return EditType::VERB_INFL;
  const auto fa = lexicon::analyze(a->surface).verb_form;
  const auto fb = lexicon::analyze(b->surface).verb_form;
  if (o.size() == 1 && c.size() == 1) {
    const bool third = (fa == VerbForm::Present3sg) != (fb == VerbForm::Present3sg);
    if (present_like(fa) && present_like(fb) && (third || (fa == VerbForm::Present && fb == VerbForm::Present))) {
      return EditType::VERB_SVA;
    }
    if ((fa == VerbForm::PastSingular && fb == VerbForm::PastPlural) ||
        (fa == VerbForm::PastPlural && fb == VerbForm::PastSingular)) {
      return EditType::VERB_SVA;
    }
  }
  const bool gerund = (fa == VerbForm::Gerund) != (fb == VerbForm::Gerund);
  const bool participle = (fa == VerbForm::Participle) != (fb == VerbForm::Participle);
  if (gerund || participle || has_to(o) != has_to(c)) return EditType::VERB_FORM;
  return EditType::VERB_TENSE;
}

inline bool is_degree_word(const AnnotatedToken& t) {
  const auto w = text::to_lower(t.surface);
  return w == "more" || w == "most";
}

inline bool rule_adjective_form(const Tokens& o, const Tokens& c) {
  Tokens os, cs;
  bool degree_word = false;
  for (const auto& t : o) {
    if (is_degree_word(t)) degree_word = true;
    else os.push_back(t);
  }
  for (const auto& t : c) {
    if (is_degree_word(t)) degree_word = true;
    else cs.push_back(t);
  }
  if (os.empty() && cs.empty()) return degree_word && o.size() == 1 && c.size() == 1;
  if (os.size() != 1 || cs.size() != 1) return false;
  const auto& a = os.front();
  const auto& b = cs.front();
  if (a.pos != Pos::ADJ || b.pos != Pos::ADJ || !same_lemma(a, b)) return false;
  return degree_word || lexicon::analyze(a.surface).degree != lexicon::analyze(b.surface).degree;
}

inline std::optional<EditType> rule_shared_pos(const Tokens& o, const Tokens& c) {
  std::set<Pos> tags;
  for (const auto& t : o) tags.insert(t.pos);
  for (const auto& t : c) tags.insert(t.pos);
  if (tags == std::set<Pos>{Pos::PART, Pos::PREP}) return EditType::PART;
  if (tags.size() != 1) return std::nullopt;
  switch (*tags.begin()) {
    case Pos::ADJ: return EditType::ADJ;
    case Pos::ADV: return EditType::ADV;
    case Pos::CONJ: return EditType::CONJ;
    case Pos::DET: return EditType::DET;
    case Pos::NOUN: return EditType::NOUN;
    case Pos::PART: return EditType::PART;
    case Pos::PREP: return EditType::PREP;
    case Pos::PRON: return EditType::PRON;
    case Pos::PUNCT: return EditType::PUNCT;
    case Pos::VERB: return EditType::VERB;
    default: return std::nullopt;
  }
}

}  // namespace detail

/// Edit type by a fixed rule cascade; the first matching rule wins and
/// OTHER is the fallback. Case/spacing and reordering checks run ahead of
/// the punctuation rule so they hold for every span. Rules that compare the
/// two sides token by token (SPELL through ADJ:FORM) only apply to
/// replacements.
inline EditType classify_type(const EditSpan& span) {
  using namespace detail;
  const auto& o = span.src_tokens;
  const auto& c = span.trg_tokens;
  const bool replacement = !o.empty() && !c.empty();

  if (rule_orth(o, c)) return EditType::ORTH;
  if (rule_word_order(o, c)) return EditType::WO;
  if (rule_punct(o, c)) return EditType::PUNCT;
  if (rule_contraction(o, c)) return EditType::CONTR;

  if (replacement) {
    if (o.size() == 1 && c.size() == 1) {
      const auto& a = o.front();
      const auto& b = c.front();
      if (!is_known(a) && is_known(b) &&
          char_similarity(text::to_lower(a.surface), text::to_lower(b.surface)) >= 0.5) {
        return EditType::SPELL;
      }
      if (same_lemma(a, b) && a.pos != b.pos) return EditType::MORPH;
    }
    if (auto t = rule_noun(o, c)) return *t;
    if (auto t = rule_verb(o, c)) return *t;
    if (rule_adjective_form(o, c)) return EditType::ADJ_FORM;
  }
  if (auto t = rule_shared_pos(o, c)) return *t;
  return EditType::OTHER;
}

inline Edit classify(EditSpan span) {
  Edit e;
  e.category = categorize(span);
  e.type = classify_type(span);
  e.span = std::move(span);
  return e;
}

/// Aligns, merges and types the edits that turn `src` into `trg`.
inline std::vector<Edit> extract_edits(const AnnotatedSentence& src, const AnnotatedSentence& trg,
                                       MergeMode mode = MergeMode::Merge) {
  std::vector<Edit> edits;
  for (auto& span : merge_ops(align(src, trg), src, trg, mode)) edits.push_back(classify(std::move(span)));
  return edits;
}

inline M2Edit to_m2(const Edit& e, int annotator = 0) {
  M2Edit m;
  m.start = static_cast<int>(e.span.src.begin);
  m.end = static_cast<int>(e.span.src.end);
  m.label = e.label();
  m.correction = e.correction();
  m.annotator = annotator;
  return m;
}

inline M2Document to_m2_document(const AnnotatedSentence& src, const std::vector<Edit>& edits, int annotator = 0) {
  M2Document doc;
  for (const auto& t : src.tokens) doc.source_tokens.push_back(t.surface);
  auto& list = doc.annotations[annotator];
  for (const auto& e : edits) list.push_back(to_m2(e, annotator));
  return doc;
}

/// Identity used when comparing two edit sets over the same source: source
/// span, correction text and category.
inline auto partition_key(const Edit& e) { return std::make_tuple(e.span.src, e.correction(), e.category); }

struct EditPartition {
  std::vector<Edit> incorrect;
  std::vector<Edit> ignored;
};

/// Multiset differences of source-to-target edits `a` and source-to-output
/// edits `c`: incorrect = a - c, ignored = c - a.
inline EditPartition edit_set_partition(const std::vector<Edit>& a, const std::vector<Edit>& c) {
  auto difference = [](const std::vector<Edit>& left, const std::vector<Edit>& right) {
    std::vector<bool> used(right.size(), false);
    std::vector<Edit> out;
    for (const auto& e : left) {
      bool matched = false;
      for (std::size_t k = 0; k < right.size(); ++k) {
        if (!used[k] && partition_key(right[k]) == partition_key(e)) {
          used[k] = true;
          matched = true;
          break;
        }
      }
      if (!matched) out.push_back(e);
    }
    return out;
  };
  return {difference(a, c), difference(c, a)};
}

}  // namespace peet
