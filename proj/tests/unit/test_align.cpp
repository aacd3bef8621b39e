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
#include <chrono>
#include <limits>
#include <string>
#include <vector>

#include "peet/align.hpp"
#include "peet/annotate.hpp"
#include "peet/rng.hpp"

#include "oracles.hpp"

namespace peet {
namespace {

using oracle::brute_force_cost;
using oracle::kVocab;
using oracle::perturb;
using oracle::random_sentence;


AnnotatedToken tok(std::string surface, std::string lemma, Pos pos) { return {std::move(surface), std::move(lemma), pos}; }

void expect_consistent(const std::vector<AlignmentOp>& ops, const AnnotatedSentence& s, const AnnotatedSentence& t) {
  std::size_t i = 0, j = 0;
  for (const auto& op : ops) {
    ASSERT_EQ(op.src.begin, i);
    ASSERT_EQ(op.trg.begin, j);
    switch (op.kind) {
      case OpKind::Match:
        EXPECT_EQ(s[i].surface, t[j].surface);
        EXPECT_EQ(op.cost, 0.0);
        break;
      case OpKind::Sub: EXPECT_NE(s[i].surface, t[j].surface); break;
      case OpKind::Del: EXPECT_TRUE(op.trg.empty()); break;
      case OpKind::Ins: EXPECT_TRUE(op.src.empty()); break;
      case OpKind::Transpose: EXPECT_EQ(op.src.size(), op.trg.size()); break;
    }
    i = op.src.end;
    j = op.trg.end;
  }
  EXPECT_EQ(i, s.size());
  EXPECT_EQ(j, t.size());
}

TEST(Costs, CharSimilarity) {
  EXPECT_DOUBLE_EQ(char_similarity("", ""), 1.0);
  EXPECT_DOUBLE_EQ(char_similarity("abc", "abc"), 1.0);
  EXPECT_DOUBLE_EQ(char_similarity("abcd", "abed"), 0.75);
  EXPECT_DOUBLE_EQ(char_similarity("ab", ""), 0.0);
}

TEST(Costs, SubstitutionComponents) {
  const auto eat = tok("eat", "eat", Pos::VERB);
  EXPECT_EQ(substitution_cost(eat, eat), 0.0);
  // same lemma and POS: only the character term, 0.25 * (1 - 1/3)
  EXPECT_NEAR(substitution_cost(eat, tok("ate", "eat", Pos::VERB)), 0.25 * (1.0 - 1.0 / 3.0), 1e-15);
  // lemma and POS differ, no shared characters
  EXPECT_NEAR(substitution_cost(tok("to", "to", Pos::PART), tok("by", "by", Pos::PREP)), 1.0, 1e-15);
  // case-only change hits the floor
  EXPECT_DOUBLE_EQ(substitution_cost(tok("The", "the", Pos::DET), tok("the", "the", Pos::DET)), 0.1);
}

TEST(Costs, TransposeDiscount) {
  EXPECT_DOUBLE_EQ(transpose_cost(2), 1.5);
  EXPECT_DOUBLE_EQ(transpose_cost(4), 3.5);
  const auto s = annotate("a b c"), t = annotate("b A c");
  EXPECT_TRUE(transposable(s, 0, t, 0, 2));
  EXPECT_TRUE(transposable(s, 0, t, 0, 3));
  EXPECT_FALSE(transposable(s, 1, t, 1, 2));
  EXPECT_FALSE(transposable(s, 0, t, 0, 1));
}

TEST(Align, IdentityIsAllMatches) {
  const auto s = annotate("we are distracted to worry .");
  const auto ops = align(s, s);
  ASSERT_EQ(ops.size(), s.size());
  for (const auto& op : ops) EXPECT_EQ(op.kind, OpKind::Match);
  EXPECT_EQ(total_cost(ops), 0.0);
}

TEST(Align, EmptySides) {
  const auto s = annotate("a b");
  const auto e = annotate("");
  EXPECT_TRUE(align(e, e).empty());
  const auto del = align(s, e);
  ASSERT_EQ(del.size(), 2u);
  EXPECT_EQ(del[0].kind, OpKind::Del);
  EXPECT_EQ(total_cost(align(e, s)), 2.0);
}

TEST(Align, SwapOfTwoUsesTranspose) {
  const auto ops = align(annotate("I very like it"), annotate("I like very it"));
  ASSERT_EQ(ops.size(), 3u);
  EXPECT_EQ(ops[1].kind, OpKind::Transpose);
  EXPECT_EQ(ops[1].src, (TokenRange{1, 3}));
  EXPECT_DOUBLE_EQ(total_cost(ops), 1.5);
}

TEST(Align, LongRotationPrefersIndels) {
  // moving one word across two costs 2 with INS + DEL, less than a 3-token transposition (2.5)
  const auto s = annotate("he said yes"), t = annotate("yes he said");
  EXPECT_DOUBLE_EQ(total_cost(align(s, t)), 2.0);
  EXPECT_DOUBLE_EQ(brute_force_cost(s, t), 2.0);
}

TEST(Align, PreferenceOrderOnTies) {
  // one substitution is cheaper than DEL + INS
  const auto ops = align(annotate("x a"), annotate("x b"));
  ASSERT_EQ(ops.size(), 2u);
  EXPECT_EQ(ops[1].kind, OpKind::Sub);
  // of two equal-cost scripts, the one matching first wins
  const auto del = align(annotate("the the cat"), annotate("the cat"));
  ASSERT_EQ(del.size(), 3u);
  EXPECT_EQ(del[0].kind, OpKind::Match);
  EXPECT_EQ(del[1].kind, OpKind::Del);
}

TEST(Align, MatchesBruteForceOn200RandomPairs) {
  Rng rng(2024);
  const auto start = std::chrono::steady_clock::now();
  for (int c = 0; c < 200; ++c) {
    const auto s = random_sentence(rng, 6);
    const auto t = rng.below(2) == 0 ? random_sentence(rng, 6) : perturb(rng, s, 6);
    const auto ops = align(s, t);
    expect_consistent(ops, s, t);
    EXPECT_EQ(total_cost(ops), brute_force_cost(s, t)) << s.raw << " => " << t.raw;
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 10.0);
}

TEST(Align, CostIsSymmetricUnderSwap) {
  Rng rng(9);
  for (int c = 0; c < 100; ++c) {
    const auto s = random_sentence(rng, 6);
    const auto t = perturb(rng, s, 6);
    EXPECT_NEAR(total_cost(align(s, t)), total_cost(align(t, s)), 1e-12);
  }
}

TEST(Merge, AdjacentNonMatchesFormOneSpan) {
  const auto s = annotate("a b c"), t = annotate("a x y z c");
  const auto spans = merge_ops(align(s, t), s, t);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].src, (TokenRange{1, 2}));
  EXPECT_EQ(spans[0].trg, (TokenRange{1, 4}));
  EXPECT_EQ(spans[0].trg_tokens.size(), 3u);
}

TEST(Merge, SubstitutionOnlyRunsSplit) {
  const auto s = annotate("we are distracted to worry about"), t = annotate("we are distracted from worrying about");
  const auto spans = merge_ops(align(s, t), s, t);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].src, (TokenRange{3, 4}));
  EXPECT_EQ(spans[1].src, (TokenRange{4, 5}));
}

TEST(Merge, AllSplitGivesOneSpanPerOp) {
  const auto s = annotate("a b c"), t = annotate("a x y z c");
  const auto ops = align(s, t);
  const auto spans = merge_ops(ops, s, t, MergeMode::AllSplit);
  const auto non_matches = std::count_if(ops.begin(), ops.end(), [](const AlignmentOp& o) { return o.kind != OpKind::Match; });
  EXPECT_EQ(static_cast<long>(spans.size()), non_matches);
}

TEST(Merge, SpansAreOrderedAndDisjoint) {
  Rng rng(77);
  for (int c = 0; c < 200; ++c) {
    const auto s = random_sentence(rng, 8);
    const auto t = perturb(rng, s, 8);
    const auto spans = merge_ops(align(s, t), s, t);
    std::size_t last_src = 0, last_trg = 0;
    for (const auto& e : spans) {
      EXPECT_GE(e.src.begin, last_src);
      EXPECT_GE(e.trg.begin, last_trg);
      EXPECT_FALSE(e.src.empty() && e.trg.empty());
      EXPECT_EQ(e.src_tokens.size(), e.src.size());
      last_src = e.src.end;
      last_trg = e.trg.end;
    }
    if (s.raw == t.raw) {
      EXPECT_TRUE(spans.empty());
    }
  }
}

}  // namespace
}  // namespace peet
