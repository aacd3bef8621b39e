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

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "peet/classify.hpp"
#include "peet/errors.hpp"
#include "peet/text.hpp"

namespace peet {

enum class FeatureLevel { Coarse4, Type25, Full55, Extended, ExtendedFull };

inline constexpr std::string_view level_name(FeatureLevel l) {
  switch (l) {
    case FeatureLevel::Coarse4: return "COARSE4";
    case FeatureLevel::Type25: return "TYPE25";
    case FeatureLevel::Full55: return "FULL55";
    case FeatureLevel::Extended: return "EXTENDED";
    case FeatureLevel::ExtendedFull: return "EXTENDED_FULL";
  }
  return "TYPE25";
}

inline FeatureLevel parse_level(std::string_view s) {
  const auto up = text::to_lower(s);
  if (up == "coarse4" || up == "4") return FeatureLevel::Coarse4;
  if (up == "type25" || up == "25") return FeatureLevel::Type25;
  if (up == "full55" || up == "55") return FeatureLevel::Full55;
  if (up == "extended" || up == "10") return FeatureLevel::Extended;
  if (up == "extended_full" || up == "112") return FeatureLevel::ExtendedFull;
  throw usage_error("UnknownLevel", "unknown feature level '" + std::string(s) + "'");
}

inline bool is_extended(FeatureLevel l) { return l == FeatureLevel::Extended || l == FeatureLevel::ExtendedFull; }

inline constexpr std::string_view kSentenceCorrect = "sentence_correct";
inline constexpr std::array<std::string_view, 3> kLengthFeatures = {"words_in_trg", "words_in_src", "edited_words"};

/// The 54 category:type labels that carry their own column at FULL55.
inline constexpr std::array<std::string_view, 54> kFullLabels = {
    "R:OTHER",      "U:OTHER",      "R:PREP",       "R:PUNCT",     "M:PUNCT",      "R:VERB",       "R:NOUN",
    "R:NOUN:NUM",   "R:ORTH",       "R:VERB:TENSE", "M:DET",       "M:OTHER",      "R:DET",        "M:PREP",
    "R:MORPH",      "U:PREP",       "R:SPELL",      "U:CONJ",      "U:DET",        "R:WO",         "M:CONJ",
    "M:VERB",       "R:VERB:FORM",  "U:PUNCT",      "U:ADV",       "M:VERB:TENSE", "M:VERB:FORM",  "U:NOUN",
    "M:NOUN",       "R:PRON",       "R:VERB:SVA",   "U:CONTR",     "U:VERB",       "M:ADV",        "U:ADJ",
    "R:VERB:INFL",  "R:ADV",        "M:NOUN:POSS",  "R:ADJ",       "M:PRON",       "R:PART",       "R:ADJ:FORM",
    "R:NOUN:INFL",  "M:ADJ",        "R:CONJ",       "U:NOUN:POSS", "U:VERB:TENSE", "M:PART",       "U:PART",
    "R:NOUN:POSS",  "U:PRON",       "U:VERB:FORM",  "M:CONTR",     "R:CONTR",
};

/// Column label of an edit at FULL55; labels outside the fixed set fall
/// back to CAT:OTHER.
inline std::string full_label(const Edit& e) {
  auto label = e.label();
  for (auto l : kFullLabels) {
    if (l == label) return label;
  }
  return std::string(category_name(e.category)) + ":OTHER";
}

/// Count columns of a level, sentence_correct included, length features
/// excluded.
inline std::vector<std::string> edit_feature_names(FeatureLevel level) {
  std::vector<std::string> names;
  switch (level) {
    case FeatureLevel::Coarse4:
      for (auto c : kCategories) names.emplace_back(category_name(c));
      break;
    case FeatureLevel::Type25:
      for (auto t : kEditTypes) names.emplace_back(type_name(t));
      break;
    case FeatureLevel::Full55:
      for (auto l : kFullLabels) names.emplace_back(l);
      break;
    case FeatureLevel::Extended:
      for (auto side : {"incorrect:", "ignored:"}) {
        for (auto c : kCategories) names.push_back(side + std::string(category_name(c)));
      }
      break;
    case FeatureLevel::ExtendedFull:
      for (auto side : {"incorrect:", "ignored:"}) {
        for (auto l : kFullLabels) names.push_back(side + std::string(l));
      }
      break;
  }
  names.emplace_back(kSentenceCorrect);
  return names;
}

inline std::vector<std::string> feature_names(FeatureLevel level) {
  auto names = edit_feature_names(level);
  for (auto n : kLengthFeatures) names.emplace_back(n);
  return names;
}

struct FeatureVector {
  std::vector<std::string> names;
  std::vector<double> values;
  FeatureLevel level = FeatureLevel::Type25;

  double at(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return values[i];
    }
    throw usage_error("UnknownFeature", "no feature named '" + std::string(name) + "'");
  }
};

namespace detail {

inline std::string column_of(const Edit& e, FeatureLevel level) {
  switch (level) {
    case FeatureLevel::Coarse4:
    case FeatureLevel::Extended: return std::string(category_name(e.category));
    case FeatureLevel::Type25: return std::string(type_name(e.type));
    case FeatureLevel::Full55:
    case FeatureLevel::ExtendedFull: return full_label(e);
  }
  return {};
}

inline double edited_words(const std::vector<Edit>& edits) {
  double total = 0;
  for (const auto& e : edits) total += static_cast<double>(std::max(e.span.src.size(), e.span.trg.size()));
  return total;
}

inline FeatureVector empty_vector(FeatureLevel level) {
  FeatureVector v;
  v.level = level;
  v.names = feature_names(level);
  v.values.assign(v.names.size(), 0.0);
  return v;
}

inline void set_lengths(FeatureVector& v, const std::vector<Edit>& edits, const AnnotatedSentence& src,
                        const AnnotatedSentence& trg) {
  const auto n = v.values.size();
  v.values[n - 3] = static_cast<double>(trg.size());
  v.values[n - 2] = static_cast<double>(src.size());
  v.values[n - 1] = edited_words(edits);
  v.values[n - 4] = edits.empty() ? 1.0 : 0.0;
}

}  // namespace detail

/// Counts of `edits` (extracted from src to trg) at a non-extended level,
/// followed by sentence_correct and the three length features.
inline FeatureVector featurize(const std::vector<Edit>& edits, const AnnotatedSentence& src,
                               const AnnotatedSentence& trg, FeatureLevel level) {
  if (is_extended(level)) {
    throw usage_error("LevelNeedsTriple", "extended levels are computed by featurize_extended");
  }
  auto v = detail::empty_vector(level);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < v.names.size(); ++i) index.emplace(v.names[i], i);
  for (const auto& e : edits) v.values[index.at(detail::column_of(e, level))] += 1.0;
  detail::set_lengths(v, edits, src, trg);
  return v;
}

/// Extended features for an editor who received `mo` for `src` and left
/// `trg`: counts of src->trg edits the first pass missed (incorrect) and
/// src->mo edits the editor undid (ignored). Sentence-correct and length
/// features describe the mo->trg pair.
inline FeatureVector featurize_extended(const AnnotatedSentence& src, const AnnotatedSentence& mo,
                                        const AnnotatedSentence& trg, FeatureLevel level) {
  if (!is_extended(level)) {
    throw usage_error("LevelNotExtended", "featurize_extended needs an extended level");
  }
  auto v = detail::empty_vector(level);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < v.names.size(); ++i) index.emplace(v.names[i], i);
  const auto part = edit_set_partition(extract_edits(src, trg), extract_edits(src, mo));
  for (const auto& e : part.incorrect) v.values[index.at("incorrect:" + detail::column_of(e, level))] += 1.0;
  for (const auto& e : part.ignored) v.values[index.at("ignored:" + detail::column_of(e, level))] += 1.0;
  detail::set_lengths(v, extract_edits(mo, trg), mo, trg);
  return v;
}

struct Standardizer {
  std::vector<std::string> names;
  std::vector<double> means;
  std::vector<double> stds;
  std::vector<bool> binary_mask;

  std::size_t size() const { return names.size(); }
};

/// Column means and population standard deviations over `rows`; the
/// sentence_correct column is masked and zero-variance columns keep std 1.
inline Standardizer fit_standardizer(const std::vector<std::string>& names,
                                     const std::vector<std::vector<double>>& rows) {
  if (rows.size() < 2) throw data_error("TooFewRows", "standardizer needs at least 2 rows");
  const auto d = names.size();
  Standardizer s;
  s.names = names;
  s.means.assign(d, 0.0);
  s.stds.assign(d, 1.0);
  s.binary_mask.assign(d, false);
  for (const auto& r : rows) {
    if (r.size() != d) throw data_error("DimensionMismatch", "row width differs from the feature names");
  }
  const auto n = static_cast<double>(rows.size());
  for (std::size_t j = 0; j < d; ++j) {
    if (names[j] == kSentenceCorrect) {
      s.binary_mask[j] = true;
      continue;
    }
    double mean = 0;
    for (const auto& r : rows) mean += r[j];
    mean /= n;
    double var = 0;
    for (const auto& r : rows) var += (r[j] - mean) * (r[j] - mean);
    var /= n;
    s.means[j] = mean;
    const double sd = std::sqrt(var);
    s.stds[j] = sd > 1e-12 * std::max(1.0, std::abs(mean)) ? sd : 1.0;
  }
  return s;
}

inline Standardizer fit_standardizer(std::span<const FeatureVector> vectors) {
  if (vectors.size() < 2) throw data_error("TooFewRows", "standardizer needs at least 2 rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.names != vectors.front().names) throw data_error("NameMismatch", "feature vectors use different names");
    rows.push_back(v.values);
  }
  return fit_standardizer(vectors.front().names, rows);
}

inline std::vector<double> apply_standardizer(const Standardizer& s, std::span<const double> values) {
  if (values.size() != s.size()) throw data_error("NameMismatch", "feature count differs from the standardizer");
  std::vector<double> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    out[j] = s.binary_mask[j] ? values[j] : (values[j] - s.means[j]) / s.stds[j];
  }
  return out;
}

inline std::vector<double> apply_standardizer(const Standardizer& s, const FeatureVector& v) {
  if (v.names != s.names) throw data_error("NameMismatch", "feature names differ from the standardizer");
  return apply_standardizer(s, std::span<const double>(v.values));
}

/// A feature matrix with its target column, as stored in feature CSV files.
struct FeatureTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> rows;
  std::vector<double> seconds;
  std::optional<FeatureLevel> level;

  std::size_t size() const { return rows.size(); }
};

inline std::optional<FeatureLevel> level_from_names(const std::vector<std::string>& names) {
  for (auto l : {FeatureLevel::Coarse4, FeatureLevel::Type25, FeatureLevel::Full55, FeatureLevel::Extended,
                 FeatureLevel::ExtendedFull}) {
    if (feature_names(l) == names) return l;
  }
  return std::nullopt;
}

inline std::string format_number(double x) {
  if (x == std::floor(x) && std::abs(x) < 1e15) return std::to_string(static_cast<long long>(x));
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

inline std::string emit_feature_csv(const FeatureTable& t) {
  std::string out = text::join(t.names, ",") + ",seconds\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (double x : t.rows[i]) out += format_number(x) + ",";
    out += format_number(t.seconds[i]) + "\n";
  }
  return out;
}

inline double parse_double(std::string_view field, std::size_t line) {
  const auto s = text::trim(field);
  double x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw data_error("MalformedLine", "line " + std::to_string(line) + ": '" + std::string(s) + "' is not a number");
  }
  return x;
}

/// Reads a header row of feature names, a trailing "seconds" column, and
/// numeric rows.
inline FeatureTable parse_feature_csv(std::string_view content) {
  const auto lines = text::split_lines(content);
  if (lines.empty()) throw data_error("EmptyInput", "feature file is empty");
  auto header = text::split(lines.front(), ",");
  for (auto& h : header) h = std::string(text::trim(h));
  if (header.size() < 2 || header.back() != "seconds") {
    throw data_error("MalformedLine", "feature header must end with a 'seconds' column");
  }
  FeatureTable t;
  t.names.assign(header.begin(), header.end() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (text::trim(lines[i]).empty()) continue;
    const auto fields = text::split(lines[i], ",");
    if (fields.size() != header.size()) {
      throw data_error("MalformedLine", "line " + std::to_string(i + 1) + ": expected " +
                                            std::to_string(header.size()) + " fields");
    }
    std::vector<double> row;
    row.reserve(t.names.size());
    for (std::size_t j = 0; j + 1 < fields.size(); ++j) row.push_back(parse_double(fields[j], i + 1));
    t.rows.push_back(std::move(row));
    t.seconds.push_back(parse_double(fields.back(), i + 1));
  }
  t.level = level_from_names(t.names);
  return t;
}

}  // namespace peet
