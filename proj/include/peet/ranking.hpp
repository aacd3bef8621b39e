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
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "peet/annotate.hpp"
#include "peet/classify.hpp"
#include "peet/features.hpp"
#include "peet/gec_metrics.hpp"
#include "peet/model.hpp"
#include "peet/parallel.hpp"

namespace peet {

enum class RefAggregate { Min, Mean };

inline RefAggregate parse_ref_aggregate(std::string_view s) {
  if (s == "min") return RefAggregate::Min;
  if (s == "mean") return RefAggregate::Mean;
  throw usage_error("UnknownAggregate", "reference aggregation must be 'min' or 'mean'");
}

struct SystemScore {
  std::string name;
  double mean_seconds = 0.0;
  std::size_t n_sentences = 0;
  int rank = 0;
};

namespace detail {

inline double aggregate(const std::vector<double>& xs, RefAggregate agg) {
  if (agg == RefAggregate::Min) return *std::min_element(xs.begin(), xs.end());
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

template <class PerRef>
SystemScore score_system(std::string name, const std::vector<std::string>& outputs,
                         const std::vector<std::vector<std::string>>& refs, RefAggregate agg, unsigned jobs,
                         PerRef per_ref) {
  if (outputs.size() != refs.size()) {
    throw data_error("LengthMismatch", "system '" + name + "' has " + std::to_string(outputs.size()) +
                                           " sentences but references cover " + std::to_string(refs.size()));
  }
  if (outputs.empty()) throw data_error("EmptyInput", "system '" + name + "' has no sentences");
  const auto per_sentence = parallel_map(outputs.size(), jobs, [&](std::size_t s) {
    if (refs[s].empty()) throw data_error("NoReferences", "sentence " + std::to_string(s + 1) + " has no reference");
    std::vector<double> values;
    for (const auto& r : refs[s]) values.push_back(per_ref(outputs[s], r));
    return aggregate(values, agg);
  });
  SystemScore out;
  out.name = std::move(name);
  out.n_sentences = outputs.size();
  for (double v : per_sentence) out.mean_seconds += v;
  out.mean_seconds /= static_cast<double>(out.n_sentences);
  return out;
}

}  // namespace detail

/// Predicted post-editing seconds for turning `output` into `reference`.
inline double estimate_seconds(const PeetModel& m, std::string_view output, std::string_view reference) {
  if (!m.level || is_extended(*m.level)) {
    throw usage_error("UnsupportedLevel", "system scoring needs a model trained on COARSE4, TYPE25 or FULL55 features");
  }
  const auto o = annotate(output);
  const auto r = annotate(reference);
  return predict(m, featurize(extract_edits(o, r), o, r, *m.level));
}

/// Mean over sentences of the predicted time to correct each output towards
/// its closest reference (or the reference mean under RefAggregate::Mean).
inline SystemScore peet_score_system(const PeetModel& m, std::string name, const std::vector<std::string>& outputs,
                                     const std::vector<std::vector<std::string>>& refs,
                                     RefAggregate agg = RefAggregate::Min, unsigned jobs = 1) {
  return detail::score_system(std::move(name), outputs, refs, agg, jobs,
                              [&](const std::string& o, const std::string& r) { return estimate_seconds(m, o, r); });
}

/// The same aggregation with word error rate in place of predicted time.
inline SystemScore wer_score_system(std::string name, const std::vector<std::string>& outputs,
                                    const std::vector<std::vector<std::string>>& refs,
                                    RefAggregate agg = RefAggregate::Min, unsigned jobs = 1) {
  return detail::score_system(std::move(name), outputs, refs, agg, jobs, [](const std::string& o, const std::string& r) {
    return wer(text::split_tokens(o), text::split_tokens(r));
  });
}

/// Rank 1 goes to the lowest mean; equal means are ordered by name.
inline std::vector<SystemScore> rank_systems(std::vector<SystemScore> scores) {
  std::sort(scores.begin(), scores.end(), [](const SystemScore& a, const SystemScore& b) {
    if (a.mean_seconds != b.mean_seconds) return a.mean_seconds < b.mean_seconds;
    return a.name < b.name;
  });
  for (std::size_t i = 0; i < scores.size(); ++i) scores[i].rank = static_cast<int>(i + 1);
  return scores;
}

struct HjrTable {
  std::vector<std::pair<std::string, double>> entries;
};

struct Correlation {
  double spearman = 0.0;
  double pearson = 0.0;
};

/// Correlates mean seconds with human scores over the shared system names.
/// No sign flip: agreement between low time and high human score is
/// negative.
inline Correlation correlate_with_hjr(const std::vector<SystemScore>& peet, const HjrTable& hjr) {
  std::unordered_map<std::string, double> human;
  for (const auto& [name, score] : hjr.entries) {
    if (!human.emplace(name, score).second) throw data_error("DuplicateRecord", "human table repeats '" + name + "'");
  }
  std::set<std::string> a, b;
  for (const auto& s : peet) a.insert(s.name);
  for (const auto& [name, score] : hjr.entries) b.insert(name);
  if (a != b || a.size() != peet.size()) throw data_error("NameSetMismatch", "system names differ between the tables");
  std::vector<double> xs, ys;
  for (const auto& s : peet) {
    xs.push_back(s.mean_seconds);
    ys.push_back(human.at(s.name));
  }
  return {spearman(xs, ys), pearson(xs, ys)};
}

inline std::string emit_ranking_csv(const std::vector<SystemScore>& ranked) {
  std::string out = "name,mean_seconds,rank\n";
  for (const auto& s : ranked) out += s.name + "," + format_number(s.mean_seconds) + "," + std::to_string(s.rank) + "\n";
  return out;
}

namespace detail {

inline std::vector<std::vector<std::string>> csv_rows(std::string_view content, std::size_t min_fields) {
  std::vector<std::vector<std::string>> rows;
  const auto lines = text::split_lines(content);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (text::trim(lines[i]).empty()) continue;
    auto fields = text::split(lines[i], ",");
    if (fields.size() < min_fields) {
      throw data_error("MalformedLine", "line " + std::to_string(i + 1) + ": expected at least " +
                                            std::to_string(min_fields) + " fields");
    }
    for (auto& f : fields) f = std::string(text::trim(f));
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw data_error("EmptyInput", "table has no rows");
  return rows;
}

}  // namespace detail

/// Reads the CSV written by emit_ranking_csv (header row first).
inline std::vector<SystemScore> parse_ranking_csv(std::string_view content) {
  std::vector<SystemScore> out;
  std::size_t line = 2;
  for (const auto& f : detail::csv_rows(content, 2)) {
    SystemScore s;
    s.name = f[0];
    s.mean_seconds = parse_double(f[1], line);
    if (f.size() > 2) s.rank = static_cast<int>(parse_double(f[2], line));
    out.push_back(std::move(s));
    ++line;
  }
  return out;
}

/// Reads "name,score" rows after a header row.
inline HjrTable parse_hjr_csv(std::string_view content) {
  HjrTable t;
  std::size_t line = 2;
  for (const auto& f : detail::csv_rows(content, 2)) t.entries.emplace_back(f[0], parse_double(f[1], line++));
  return t;
}

}  // namespace peet
