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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "peet/corpus_io.hpp"

namespace peet {
namespace {

const std::filesystem::path kData = PEET_TEST_DATA_DIR;

std::string strip_trailing_newlines(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

TEST(Parallel, PairsLinesWithOneBasedIds) {
  const auto pairs = parse_parallel("a b\nc d\n", "a x\nc d\n");
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].id, "1");
  EXPECT_EQ(pairs[1].target, "c d");
}

TEST(Parallel, HandlesCrLf) {
  const auto pairs = parse_parallel("a\r\nb\r\n", "c\r\nd\r\n");
  EXPECT_EQ(pairs[1].source, "b");
  EXPECT_EQ(pairs[1].target, "d");
}

TEST(Parallel, LineCountMismatch) {
  try {
    parse_parallel("a\nb\n", "a\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "LineCountMismatch");
    EXPECT_EQ(e.kind(), ErrorKind::Data);
  }
  EXPECT_THROW(parse_parallel("", ""), Error);
}

TEST(M2, RoundTripIsByteIdentical) {
  for (auto name : {"source_target.m2", "source_output.m2"}) {
    const auto text = read_file(kData / name);
    EXPECT_EQ(strip_trailing_newlines(emit_m2(parse_m2(text))), strip_trailing_newlines(text)) << name;
  }
}

TEST(M2, ParsesAnnotatorsAndSpans) {
  const auto docs = parse_m2(read_file(kData / "source_target.m2"));
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].source_tokens.size(), 19u);
  EXPECT_EQ(docs[0].source_tokens[13], "to");
  ASSERT_EQ(docs[0].edits(0).size(), 1u);
  ASSERT_EQ(docs[0].edits(1).size(), 2u);
  EXPECT_EQ(docs[0].edits(1)[0].correction, "will be");
  EXPECT_EQ(docs[0].edits(1)[1].start, 12);
  EXPECT_EQ(docs[0].edits(1)[1].end, 12);
  EXPECT_EQ(docs[0].edits(1)[1].label, "M:ADV");
}

TEST(M2, NoopMeansEmptyEditList) {
  const std::string text = "S a b\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n";
  const auto docs = parse_m2(text);
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_TRUE(docs[0].edits(0).empty());
  EXPECT_EQ(docs[0].annotations.count(0), 1u);
  EXPECT_EQ(emit_m2(docs), text);
}

TEST(M2, BlockWithoutEditsEmitsNoop) {
  const auto docs = parse_m2("S a b\n\nS c\nA 0 1|||R:NOUN|||d|||REQUIRED|||-NONE-|||0\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(emit_m2(docs),
            "S a b\nA -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0\n\n"
            "S c\nA 0 1|||R:NOUN|||d|||REQUIRED|||-NONE-|||0\n");
}

TEST(M2, RejectsMalformedLines) {
  auto code_of = [](const std::string& text) {
    try {
      parse_m2(text);
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  EXPECT_EQ(code_of("S a b\nA 0 1|||R:NOUN|||x\n"), "MalformedLine");
  EXPECT_EQ(code_of("S a b\nA 0 3|||R:NOUN|||x|||REQUIRED|||-NONE-|||0\n"), "SpanOutOfRange");
  EXPECT_EQ(code_of("S a b\nA 2 1|||R:NOUN|||x|||REQUIRED|||-NONE-|||0\n"), "SpanOutOfRange");
  EXPECT_EQ(code_of("A 0 1|||R:NOUN|||x|||REQUIRED|||-NONE-|||0\n"), "MalformedLine");
  EXPECT_EQ(code_of("S a b\nA x 1|||R:NOUN|||x|||REQUIRED|||-NONE-|||0\n"), "MalformedLine");
  EXPECT_EQ(code_of("S a b\nQ junk\n"), "MalformedLine");
}

TimeRecord record(std::string id, std::string variation, std::string editor, double seconds,
                  std::string src = "a b c", std::string trg = "a b c") {
  return {std::move(id), Variation::parse(variation), std::move(editor), std::move(src), std::move(trg), seconds};
}

TEST(TimeRecords, JsonlRoundTrip) {
  const std::vector<TimeRecord> records = {record("1", "SRC", "e1", 31.16, "He go .", "He goes ."),
                                           record("1", "GECTOR", "e2", 0.001, "line\nbreak \"q\"", "x")};
  const auto text = emit_time_annotations(records);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_EQ(parse_time_annotations(text), records);
}

TEST(TimeRecords, KeysMatchInterchangeFormat) {
  const auto text = emit_time_annotations({record("7", "GEC-PD", "e3", 2.5)});
  const auto j = nlohmann::json::parse(text);
  for (auto key : {"id", "variation", "editor", "src", "trg", "seconds"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["variation"], "GECPD");
}

TEST(TimeRecords, DuplicateAndMalformedRecords) {
  const std::string dup = R"({"id":"1","variation":"SRC","editor":"e","src":"a","trg":"a","seconds":1})";
  try {
    parse_time_annotations(dup + "\n" + dup + "\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "DuplicateRecord");
  }
  EXPECT_THROW(parse_time_annotations(R"({"id":"1","variation":"SRC"})"), Error);
  EXPECT_THROW(parse_time_annotations("{not json"), Error);
  EXPECT_THROW(parse_time_annotations(R"({"id":"1","variation":"SRC","editor":"e","src":"a","trg":"a","seconds":-1})"),
               Error);
}

TEST(Dataset, FilterDropsExactlyTheSlowRecords) {
  Rng rng(3);
  std::vector<TimeRecord> records;
  for (int i = 0; i < 400; ++i) records.push_back(record(std::to_string(i), "SRC", "e", rng.uniform() * 500.0));
  records.push_back(record("edge", "SRC", "e", 250.0));
  const auto kept = filter_by_time(records);
  std::size_t expected = 0;
  for (const auto& r : records) expected += r.seconds <= 250.0 ? 1 : 0;
  EXPECT_EQ(kept.size(), expected);
  for (const auto& r : kept) EXPECT_LE(r.seconds, 250.0);
  EXPECT_TRUE(std::any_of(kept.begin(), kept.end(), [](const TimeRecord& r) { return r.id == "edge"; }));
}

TEST(Dataset, MergeAveragesDuplicates) {
  const std::vector<double> times = {10.0, 21.0, 35.5, 7.25};
  std::vector<TimeRecord> records;
  for (std::size_t k = 0; k < times.size(); ++k) {
    records.push_back(record("s1", "GECTOR", "e" + std::to_string(k), times[k], " x y ", "x y"));
  }
  records.push_back(record("s2", "GECTOR", "e0", 4.0));
  const auto merged = merge_duplicates(records);
  ASSERT_EQ(merged.size(), 2u);
  EXPECT_EQ(merged[0].id, "s1");
  EXPECT_DOUBLE_EQ(merged[0].seconds, std::accumulate(times.begin(), times.end(), 0.0) / times.size());
  EXPECT_EQ(merged[0].editor, "merged");
  EXPECT_EQ(merged[1].editor, "e0");
}

TEST(Dataset, SplitIsSeededPartition) {
  std::vector<int> items(101);
  std::iota(items.begin(), items.end(), 0);
  const auto a = split_dataset(items, 0.8, 42);
  const auto b = split_dataset(items, 0.8, 42);
  const auto c = split_dataset(items, 0.8, 43);
  EXPECT_EQ(a.train, b.train);
  EXPECT_NE(a.train, c.train);
  EXPECT_EQ(a.train.size(), 80u);
  EXPECT_EQ(a.test.size(), 21u);
  std::set<int> all(a.train.begin(), a.train.end());
  all.insert(a.test.begin(), a.test.end());
  EXPECT_EQ(all.size(), items.size());
  try {
    split_dataset(items, 1.0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "BadRatio");
  }
}

TEST(Dataset, VariationStatsPerSentenceAndWord) {
  const std::vector<TimeRecord> records = {record("1", "SRC", "e", 10.0, "a b"), record("2", "SRC", "e", 30.0, "a b c d"),
                                           record("1", "GECTOR", "e", 4.0, "a")};
  const auto stats = variation_stats(records);
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_EQ(stats[0].variation, "SRC");
  EXPECT_DOUBLE_EQ(stats[0].mean_seconds_per_sentence, 20.0);
  EXPECT_DOUBLE_EQ(stats[0].mean_seconds_per_word, (5.0 + 7.5) / 2);
  EXPECT_DOUBLE_EQ(stats[1].mean_seconds_per_word, 4.0);
}

}  // namespace
}  // namespace peet
