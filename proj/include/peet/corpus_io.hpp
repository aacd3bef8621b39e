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
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "peet/errors.hpp"
#include "peet/rng.hpp"
#include "peet/text.hpp"

namespace peet {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("FileNotFound", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("FileNotWritable", "cannot write " + path.string());
  out << content;
}

// ---------------------------------------------------------------------------
// Parallel text

struct SentencePair {
  std::string id;
  std::string source;
  std::string target;

  bool operator==(const SentencePair&) const = default;
};

/// Pairs line k of each text; ids are 1-based line numbers.
inline std::vector<SentencePair> parse_parallel(std::string_view src_text, std::string_view trg_text) {
  const auto src = text::split_lines(src_text);
  const auto trg = text::split_lines(trg_text);
  if (src.empty() && trg.empty()) throw data_error("EmptyInput", "parallel input has no lines");
  if (src.size() != trg.size()) {
    throw data_error("LineCountMismatch", "source has " + std::to_string(src.size()) + " lines, target has " +
                                              std::to_string(trg.size()));
  }
  std::vector<SentencePair> pairs;
  pairs.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) pairs.push_back({std::to_string(i + 1), src[i], trg[i]});
  return pairs;
}

// ---------------------------------------------------------------------------
// M2

struct M2Edit {
  int start = 0;
  int end = 0;
  std::string label;
  std::string correction;
  std::string required_flag = "REQUIRED";
  std::string none_field = "-NONE-";
  int annotator = 0;

  bool operator==(const M2Edit&) const = default;
};

/// One "S" block. Every document has at least one annotator; an annotator
/// whose only line was a noop maps to an empty list.
struct M2Document {
  std::vector<std::string> source_tokens;
  std::map<int, std::vector<M2Edit>> annotations;

  bool operator==(const M2Document&) const = default;

  const std::vector<M2Edit>& edits(int annotator = 0) const {
    static const std::vector<M2Edit> none;
    const auto it = annotations.find(annotator);
    return it == annotations.end() ? none : it->second;
  }
};

namespace detail {

inline int parse_int(std::string_view s, std::size_t line_no) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || s.empty()) {
    throw data_error("MalformedLine", "line " + std::to_string(line_no) + ": '" + std::string(s) + "' is not an integer");
  }
  return value;
}

}  // namespace detail

inline std::vector<M2Document> parse_m2(std::string_view content) {
  std::vector<M2Document> docs;
  bool open = false;
  std::size_t line_no = 0;
  for (const auto& line : text::split_lines(content)) {
    ++line_no;
    if (text::trim(line).empty()) {
      open = false;
      continue;
    }
    if (text::starts_with(line, "S ") || line == "S") {
      M2Document doc;
      if (line.size() > 2) doc.source_tokens = text::split(std::string_view(line).substr(2), " ");
      docs.push_back(std::move(doc));
      open = true;
      continue;
    }
    if (!text::starts_with(line, "A ")) {
      throw data_error("MalformedLine", "line " + std::to_string(line_no) + " is neither an S nor an A line");
    }
    if (!open) throw data_error("MalformedLine", "line " + std::to_string(line_no) + ": A line outside an S block");

    auto fields = text::split(std::string_view(line).substr(2), "|||");
    if (fields.size() != 6) {
      throw data_error("MalformedLine", "line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                                            " '|||' fields, expected 6");
    }
    const auto span = text::split_tokens(fields[0]);
    if (span.size() != 2) throw data_error("MalformedLine", "line " + std::to_string(line_no) + ": bad span");
    M2Edit edit;
    edit.start = detail::parse_int(span[0], line_no);
    edit.end = detail::parse_int(span[1], line_no);
    edit.label = fields[1];
    edit.correction = fields[2];
    edit.required_flag = fields[3];
    edit.none_field = fields[4];
    edit.annotator = detail::parse_int(text::trim(fields[5]), line_no);
    if (edit.annotator < 0) throw data_error("MalformedLine", "line " + std::to_string(line_no) + ": negative annotator");
    if (edit.label.empty()) throw data_error("MalformedLine", "line " + std::to_string(line_no) + ": empty label");

    auto& doc = docs.back();
    auto& list = doc.annotations[edit.annotator];
    if (edit.label == "noop") continue;
    const int n = static_cast<int>(doc.source_tokens.size());
    if (edit.start < 0 || edit.end < edit.start || edit.end > n) {
      throw data_error("SpanOutOfRange", "line " + std::to_string(line_no) + ": span " + std::to_string(edit.start) +
                                             " " + std::to_string(edit.end) + " outside 0.." + std::to_string(n));
    }
    list.push_back(std::move(edit));
  }
  for (auto& doc : docs) {
    if (doc.annotations.empty()) doc.annotations[0];
  }
  return docs;
}

inline std::string emit_m2(const M2Document& doc) {
  std::string out = "S " + text::join(doc.source_tokens, " ") + "\n";
  auto emit_annotator = [&](int annotator, const std::vector<M2Edit>& edits) {
    if (edits.empty()) {
      out += "A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||" + std::to_string(annotator) + "\n";
      return;
    }
    for (const auto& e : edits) {
      out += "A " + std::to_string(e.start) + " " + std::to_string(e.end) + "|||" + e.label + "|||" + e.correction +
             "|||" + e.required_flag + "|||" + e.none_field + "|||" + std::to_string(e.annotator) + "\n";
    }
  };
  if (doc.annotations.empty()) emit_annotator(0, {});
  for (const auto& [annotator, edits] : doc.annotations) emit_annotator(annotator, edits);
  return out;
}

/// Documents separated by one blank line.
inline std::string emit_m2(const std::vector<M2Document>& docs) {
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out += "\n";
    out += emit_m2(docs[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Time records

class Variation {
 public:
  enum class Kind { Src, Gector, GecPd, Other };

  Variation() = default;
  static Variation parse(std::string_view label) {
    const auto upper = [&] {
      std::string s(label);
      std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
      return s;
    }();
    if (upper == "SRC") return Variation(Kind::Src, "SRC");
    if (upper == "GECTOR") return Variation(Kind::Gector, "GECTOR");
    if (upper == "GECPD" || upper == "GEC-PD") return Variation(Kind::GecPd, "GECPD");
    return Variation(Kind::Other, std::string(label));
  }

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  bool operator==(const Variation&) const = default;

 private:
  Variation(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}
  Kind kind_ = Kind::Src;
  std::string label_ = "SRC";
};

/// One post-edit event. `source` is the text the editor was asked to
/// correct (the tool output when there was one) and `correction` what they
/// submitted.
struct TimeRecord {
  std::string id;
  Variation variation;
  std::string editor;
  std::string source;
  std::string correction;
  double seconds = 0.0;

  bool operator==(const TimeRecord&) const = default;
};

inline nlohmann::json to_json(const TimeRecord& r) {
  return nlohmann::json{{"id", r.id},         {"variation", r.variation.label()}, {"editor", r.editor},
                        {"src", r.source},    {"trg", r.correction},              {"seconds", r.seconds}};
}

inline TimeRecord time_record_from_json(const nlohmann::json& j) {
  TimeRecord r;
  try {
    r.id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
    r.variation = Variation::parse(j.at("variation").get<std::string>());
    r.editor = j.at("editor").get<std::string>();
    r.source = j.at("src").get<std::string>();
    r.correction = j.at("trg").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw data_error("MalformedRecord", std::string("time record: ") + e.what());
  }
  if (r.id.empty()) throw data_error("MalformedRecord", "time record with empty id");
  if (!(r.seconds >= 0.0) || !std::isfinite(r.seconds)) {
    throw data_error("MalformedRecord", "time record " + r.id + " has invalid seconds");
  }
  return r;
}

/// Reads JSONL time records; (id, variation, editor) must be unique.
inline std::vector<TimeRecord> parse_time_annotations(std::string_view content) {
  std::vector<TimeRecord> out;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::size_t line_no = 0;
  for (const auto& line : text::split_lines(content)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw data_error("MalformedRecord", "line " + std::to_string(line_no) + ": " + e.what());
    }
    auto r = time_record_from_json(j);
    if (!seen.emplace(r.id, r.variation.label(), r.editor).second) {
      throw data_error("DuplicateRecord", "line " + std::to_string(line_no) + ": duplicate (id, variation, editor) for " + r.id);
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string emit_time_annotations(const std::vector<TimeRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += "\n";
  }
  return out;
}

/// Drops records that took strictly longer than `max_seconds`.
inline std::vector<TimeRecord> filter_by_time(const std::vector<TimeRecord>& records, double max_seconds = 250.0) {
  std::vector<TimeRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [&](const TimeRecord& r) { return r.seconds <= max_seconds; });
  return out;
}

/// Collapses records with identical trimmed (source, correction) into one
/// record at the mean time, kept at the position of the first occurrence.
inline std::vector<TimeRecord> merge_duplicates(const std::vector<TimeRecord>& records) {
  struct Group {
    std::size_t first;
    double total = 0.0;
    std::size_t count = 0;
  };
  std::map<std::pair<std::string, std::string>, Group> groups;
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::pair<std::string, std::string> key{std::string(text::trim(records[i].source)),
                                            std::string(text::trim(records[i].correction))};
    auto [it, inserted] = groups.try_emplace(key, Group{i});
    if (inserted) order.push_back(key);
    it->second.total += records[i].seconds;
    ++it->second.count;
  }
  std::vector<TimeRecord> out;
  out.reserve(order.size());
  for (const auto& key : order) {
    const auto& g = groups.at(key);
    TimeRecord r = records[g.first];
    if (g.count > 1) {
      r.seconds = g.total / static_cast<double>(g.count);
      r.editor = "merged";
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
struct DatasetSplit {
  std::vector<T> train;
  std::vector<T> test;
  std::uint64_t seed = kDefaultSeed;
};

/// Seeded shuffle, then the first floor(ratio * n) items go to train.
template <class T>
DatasetSplit<T> split_dataset(std::vector<T> items, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw usage_error("BadRatio", "split ratio must lie strictly between 0 and 1");
  Rng rng(seed);
  rng.shuffle(items);
  const auto n_train = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(items.size()) + 1e-9));
  DatasetSplit<T> split;
  split.seed = seed;
  split.train.assign(std::make_move_iterator(items.begin()), std::make_move_iterator(items.begin() + n_train));
  split.test.assign(std::make_move_iterator(items.begin() + n_train), std::make_move_iterator(items.end()));
  return split;
}

struct VariationStats {
  std::string variation;
  std::size_t records = 0;
  double mean_seconds_per_sentence = 0.0;
  double mean_seconds_per_word = 0.0;
};

/// Per-variation average time per sentence and per word of the text being
/// corrected, in first-seen variation order.
inline std::vector<VariationStats> variation_stats(const std::vector<TimeRecord>& records) {
  std::vector<VariationStats> out;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::size_t> worded;
  for (const auto& r : records) {
    auto [it, inserted] = index.try_emplace(r.variation.label(), out.size());
    if (inserted) {
      out.push_back({r.variation.label()});
      worded.push_back(0);
    }
    auto& s = out[it->second];
    ++s.records;
    s.mean_seconds_per_sentence += r.seconds;
    const auto words = text::split_tokens(r.source).size();
    if (words > 0) {
      s.mean_seconds_per_word += r.seconds / static_cast<double>(words);
      ++worded[it->second];
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].mean_seconds_per_sentence /= static_cast<double>(out[i].records);
    if (worded[i] > 0) out[i].mean_seconds_per_word /= static_cast<double>(worded[i]);
  }
  return out;
}

}  // namespace peet
