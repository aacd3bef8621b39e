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
#include <functional>
#include <numeric>
#include <vector>

#include "peet/gec_metrics.hpp"
#include "peet/rng.hpp"

#include "oracles.hpp"

namespace peet {
namespace {

using oracle::pearson_oracle;
using oracle::rank_oracle;


using Edits = std::vector<EditKey>;

EditKey k(int s, int e, std::string c) { return {s, e, std::move(c)}; }

// Largest matching between hyp and gold by trying every assignment.
std::int64_t brute_tp(const Edits& hyp, const Edits& gold) {
  std::vector<bool> used(gold.size(), false);
  std::function<std::int64_t(std::size_t)> go = [&](std::size_t i) -> std::int64_t {
    if (i == hyp.size()) return 0;
    std::int64_t best = go(i + 1);
    for (std::size_t g = 0; g < gold.size(); ++g) {
      if (!used[g] && gold[g] == hyp[i]) {
        used[g] = true;
        best = std::max(best, 1 + go(i + 1));
        used[g] = false;
      }
    }
    return best;
  };
  return go(0);
}

Edits random_edits(Rng& rng, std::size_t max_n) {
  Edits out;
  for (std::size_t i = 0, n = rng.below(max_n + 1); i < n; ++i) {
    const int s = static_cast<int>(rng.below(3));
    out.push_back(k(s, s + static_cast<int>(rng.below(2)), rng.below(2) ? "a" : "b"));
  }
  return out;
}

TEST(MatchEdits, Examples) {
  const Edits gold = {k(0, 1, "x"), k(2, 2, "y"), k(3, 4, "")};
  EXPECT_EQ(match_edits(gold, gold), (MatchCounts{3, 0, 0}));
  EXPECT_EQ(match_edits(Edits{}, Edits{k(0, 1, "x"), k(1, 2, "y")}), (MatchCounts{0, 0, 2}));
  const Edits hyp = {k(0, 1, "x"), k(2, 2, "y"), k(3, 4, "z")};
  EXPECT_EQ(match_edits(hyp, gold), (MatchCounts{2, 1, 1}));
  // correction text is case-sensitive
  EXPECT_EQ(match_edits(Edits{k(0, 1, "X")}, Edits{k(0, 1, "x")}).tp, 0);
}

TEST(MatchEdits, AgreesWithBruteForceAndIsSymmetric) {
  Rng rng(3);
  for (int c = 0; c < 300; ++c) {
    const auto h = random_edits(rng, 4), g = random_edits(rng, 4);
    const auto m = match_edits(h, g);
    EXPECT_EQ(m.tp, brute_tp(h, g));
    EXPECT_EQ(m.fp, static_cast<std::int64_t>(h.size()) - m.tp);
    const auto swapped = match_edits(g, h);
    EXPECT_EQ(swapped.tp, m.tp);
    EXPECT_EQ(swapped.fp, m.fn);
    EXPECT_EQ(swapped.fn, m.fp);
  }
}

TEST(FBeta, Examples) {
  const auto r = f_beta({2, 1, 1});
  EXPECT_DOUBLE_EQ(r.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 2.0 / 3.0);
  EXPECT_NEAR(r.f, 2.0 / 3.0, 1e-15);
  const auto z = f_beta({0, 0, 0});
  EXPECT_EQ(z.precision, 0.0);
  EXPECT_EQ(z.recall, 0.0);
  EXPECT_EQ(z.f, 0.0);
  EXPECT_DOUBLE_EQ(f_beta({4, 0, 0}).f, 1.0);
  const auto direct = [](double p, double rc) { return 1.25 * p * rc / (0.25 * p + rc); };
  EXPECT_NEAR(f_beta({3, 2, 5}).f, direct(0.6, 0.375), 1e-15);
}

TEST(FBeta, PrecisionWeighsMore) {
  for (std::int64_t tp = 1; tp <= 5; ++tp) {
    for (std::int64_t fp = 0; fp <= 5; ++fp) {
      for (std::int64_t fn = 0; fn <= 5; ++fn) {
        EXPECT_LT(f_beta({tp, fp + 1, fn}).f, f_beta({tp, fp, fn + 1}).f);
      }
    }
  }
}

double exhaustive_best_f(const std::vector<Edits>& hyp, const std::vector<std::vector<Edits>>& refs) {
  std::vector<std::size_t> pick(hyp.size(), 0);
  double best = -1;
  while (true) {
    MatchCounts c;
    for (std::size_t s = 0; s < hyp.size(); ++s) c += match_edits(hyp[s], refs[s][pick[s]]);
    best = std::max(best, f_beta(c).f);
    std::size_t s = 0;
    while (s < pick.size() && ++pick[s] == refs[s].size()) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return best;
}

TEST(MultiRef, SingleReferenceCollapses) {
  const std::vector<Edits> hyp = {{k(0, 1, "a")}, {k(1, 2, "b"), k(3, 3, "c")}};
  const std::vector<std::vector<Edits>> refs = {{{k(0, 1, "a")}}, {{k(1, 2, "x")}}};
  const auto r = multi_ref_score(hyp, refs);
  MatchCounts c = match_edits(hyp[0], refs[0][0]);
  c += match_edits(hyp[1], refs[1][0]);
  EXPECT_EQ(r.counts, c);
}

TEST(MultiRef, ExactReferenceIsChosen) {
  const std::vector<Edits> hyp = {{k(0, 1, "a"), k(2, 3, "b")}};
  const std::vector<std::vector<Edits>> refs = {{{k(5, 6, "q")}, {k(0, 1, "a"), k(2, 3, "b")}}};
  const auto r = multi_ref_score(hyp, refs);
  EXPECT_EQ(r.counts, (MatchCounts{2, 0, 0}));
  EXPECT_EQ(r.chosen[0], 1u);
}

TEST(MultiRef, EmptyHypothesisScoresZero) {
  const std::vector<Edits> hyp = {{}, {}};
  const std::vector<std::vector<Edits>> refs = {{{k(0, 1, "a")}}, {{k(1, 1, "b")}, {k(2, 2, "c")}}};
  const auto r = multi_ref_score(hyp, refs);
  EXPECT_EQ(r.prf.precision, 0.0);
  EXPECT_EQ(r.prf.recall, 0.0);
  EXPECT_THROW(multi_ref_score(hyp, std::vector<std::vector<Edits>>{{}, {}}), Error);
}

TEST(MultiRef, ReachesExhaustiveOptimumAndBeatsFixedReferences) {
  Rng rng(21);
  for (int c = 0; c < 300; ++c) {
    const auto n = 1 + rng.below(3);
    const auto n_refs = 1 + rng.below(3);
    std::vector<Edits> hyp;
    std::vector<std::vector<Edits>> refs(n);
    for (std::size_t s = 0; s < n; ++s) {
      hyp.push_back(random_edits(rng, 3));
      for (std::size_t r = 0; r < n_refs; ++r) refs[s].push_back(random_edits(rng, 3));
    }
    const auto got = multi_ref_score(hyp, refs).prf.f;
    EXPECT_NEAR(got, exhaustive_best_f(hyp, refs), 1e-12);
    for (std::size_t r = 0; r < n_refs; ++r) {
      MatchCounts fixed;
      for (std::size_t s = 0; s < n; ++s) fixed += match_edits(hyp[s], refs[s][r]);
      EXPECT_GE(got + 1e-12, f_beta(fixed).f);
    }
  }
}

TEST(Iaa, IdenticalSetsScoreHundred) {
  const std::vector<Edits> set = {{k(0, 1, "a")}, {k(2, 2, "b")}, {k(1, 3, "")}};
  const auto r = iaa(std::vector<std::vector<Edits>>{set, set, set});
  ASSERT_EQ(r.scores.size(), 3u);
  for (double s : r.scores) EXPECT_DOUBLE_EQ(s, 100.0);
  EXPECT_DOUBLE_EQ(r.average, 100.0);
}

TEST(Iaa, DivergentSetScoresLowest) {
  std::vector<Edits> a, b, odd;
  for (int s = 0; s < 5; ++s) {
    a.push_back({k(0, 1, "x"), k(2, 3, "y")});
    b.push_back({k(0, 1, "x"), k(2, 3, s % 2 ? "y" : "z")});
    odd.push_back({k(4, 5, "w")});
  }
  const auto r = iaa(std::vector<std::vector<Edits>>{a, b, odd});
  EXPECT_LT(r.scores[2], r.scores[0]);
  EXPECT_LT(r.scores[2], r.scores[1]);
  EXPECT_NEAR(r.average, (r.scores[0] + r.scores[1] + r.scores[2]) / 3, 1e-12);
}

TEST(Iaa, ManySetsUseSeededPairs) {
  Rng rng(2);
  std::vector<std::vector<Edits>> sets;
  for (int k2 = 0; k2 < 6; ++k2) {
    std::vector<Edits> set;
    for (int s = 0; s < 4; ++s) set.push_back(random_edits(rng, 2));
    sets.push_back(set);
  }
  const auto a = iaa(sets, 7), b = iaa(sets, 7);
  EXPECT_EQ(a.scores, b.scores);
  EXPECT_THROW(iaa(std::vector<std::vector<Edits>>(2)), Error);
}

std::vector<std::string> words(const std::string& s) { return text::split_tokens(s); }

TEST(Wer, Examples) {
  EXPECT_EQ(wer(words("a b c"), words("a b c")), 0.0);
  EXPECT_DOUBLE_EQ(wer(words("a b c"), words("a x c")), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(wer({}, words("a b c d")), 1.0);
  EXPECT_THROW(wer(words("a"), {}), Error);
}

TEST(Wer, DistanceIsAMetric) {
  Rng rng(4);
  const std::vector<std::string> v = {"a", "b", "c"};
  auto random_words = [&] {
    std::vector<std::string> out;
    for (std::size_t i = 0, n = rng.below(6); i < n; ++i) out.push_back(v[rng.below(3)]);
    return out;
  };
  for (int c = 0; c < 300; ++c) {
    const auto x = random_words(), y = random_words(), z = random_words();
    EXPECT_EQ(token_distance(x, x), 0u);
    EXPECT_EQ(token_distance(x, y), token_distance(y, x));
    EXPECT_LE(token_distance(x, z), token_distance(x, y) + token_distance(y, z));
  }
}

TEST(Correlation, Examples) {
  const std::vector<double> a = {1, 2, 3}, b = {2, 4, 6}, c = {3, 2, 1};
  EXPECT_DOUBLE_EQ(pearson(a, b), 1.0);
  EXPECT_DOUBLE_EQ(pearson(a, c), -1.0);
  EXPECT_DOUBLE_EQ(spearman(a, std::vector<double>{1, 10, 100}), 1.0);
  EXPECT_DOUBLE_EQ(spearman(a, c), -1.0);
  const std::vector<double> tx = {1, 2, 2, 3}, ty = {1, 2, 3, 3};
  EXPECT_NEAR(spearman(tx, ty), pearson(std::vector<double>{1, 2.5, 2.5, 4}, std::vector<double>{1, 2, 3.5, 3.5}), 1e-15);
  EXPECT_THROW(pearson(a, std::vector<double>{5, 5, 5}), Error);
  EXPECT_THROW(pearson(std::vector<double>{1}, std::vector<double>{2}), Error);
}

TEST(Correlation, MatchesOraclesOnRandomVectors) {
  Rng rng(10);
  for (int c = 0; c < 100; ++c) {
    const std::size_t n = 10 + rng.below(20);
    std::vector<double> x, y;
    const bool ties = c % 2 == 0;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(ties ? static_cast<double>(rng.below(5)) : rng.normal());
      y.push_back(ties ? static_cast<double>(rng.below(4)) : rng.normal() + 0.5 * x.back());
    }
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) x[0] += 1;
    if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) y[0] += 1;
    EXPECT_NEAR(pearson(x, y), pearson_oracle(x, y), 1e-12);
    EXPECT_NEAR(spearman(x, y), pearson_oracle(rank_oracle(x), rank_oracle(y)), 1e-12);
  }
}

TEST(Correlation, SpearmanIgnoresMonotoneTransforms) {
  Rng rng(12);
  for (int c = 0; c < 50; ++c) {
    std::vector<double> x, y, fx;
    for (int i = 0; i < 15; ++i) {
      x.push_back(rng.normal());
      y.push_back(rng.normal());
      fx.push_back(std::exp(3 * x.back()) + 2);
    }
    EXPECT_NEAR(spearman(x, y), spearman(fx, y), 1e-12);
  }
}

}  // namespace
}  // namespace peet
