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
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "peet/annotate.hpp"
#include "peet/text.hpp"

namespace peet {

/// Half-open token index range [begin, end).
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool operator==(const TokenRange&) const = default;
  auto operator<=>(const TokenRange&) const = default;
};

enum class OpKind { Match, Sub, Del, Ins, Transpose };

struct AlignmentOp {
  OpKind kind = OpKind::Match;
  TokenRange src;
  TokenRange trg;
  double cost = 0.0;

  bool operator==(const AlignmentOp&) const = default;
};

/// A contiguous region where source and target disagree.
struct EditSpan {
  TokenRange src;
  TokenRange trg;
  std::vector<AnnotatedToken> src_tokens;
  std::vector<AnnotatedToken> trg_tokens;

  bool operator==(const EditSpan&) const = default;
};

namespace cost {
inline constexpr double kIndel = 1.0;
inline constexpr double kLemma = 0.5;
inline constexpr double kPos = 0.25;
inline constexpr double kChar = 0.25;
inline constexpr double kSubFloor = 0.1;
inline constexpr std::size_t kMaxTranspose = 4;
inline constexpr double kTransposeDiscount = 0.5;
}  // namespace cost

/// 1 - levenshtein(a, b) / max(|a|, |b|); 1 when both are empty.
inline double char_similarity(std::string_view a, std::string_view b) {
  const auto longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(text::levenshtein(a, b)) / static_cast<double>(longest);
}

/// Linguistic substitution cost in [0.1, 1] for differing surfaces, 0 for equal ones.
inline double substitution_cost(const AnnotatedToken& a, const AnnotatedToken& b) {
  if (a.surface == b.surface) return 0.0;
  const double c = cost::kLemma * (a.lemma != b.lemma ? 1.0 : 0.0) + cost::kPos * (a.pos != b.pos ? 1.0 : 0.0) +
                   cost::kChar * (1.0 - char_similarity(a.surface, b.surface));
  return std::max(c, cost::kSubFloor);
}

inline double transpose_cost(std::size_t k) { return static_cast<double>(k) - cost::kTransposeDiscount; }

/// Whether src[i, i+k) and trg[j, j+k) hold the same lowercase surfaces in
/// any order.
inline bool transposable(const AnnotatedSentence& src, std::size_t i, const AnnotatedSentence& trg, std::size_t j,
                         std::size_t k) {
  if (k < 2 || k > cost::kMaxTranspose || i + k > src.size() || j + k > trg.size()) return false;
  std::array<std::string, cost::kMaxTranspose> a, b;
  for (std::size_t t = 0; t < k; ++t) {
    a[t] = text::to_lower(src[i + t].surface);
    b[t] = text::to_lower(trg[j + t].surface);
  }
  std::sort(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k));
  return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k), b.begin());
}

/// Minimum-cost monotone alignment. Ties resolve by operator preference
/// MATCH > TRANSPOSE > SUB > DEL > INS at the earliest position where
/// optimal paths diverge.
inline std::vector<AlignmentOp> align(const AnnotatedSentence& src, const AnnotatedSentence& trg) {
  const std::size_t n = src.size();
  const std::size_t m = trg.size();
  const auto idx = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

  // best[i][j]: cheapest alignment of the suffixes src[i..), trg[j..)
  std::vector<double> best((n + 1) * (m + 1), std::numeric_limits<double>::infinity());
  std::vector<double> sub((n + 1) * (m + 1), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) sub[idx(i, j)] = substitution_cost(src[i], trg[j]);
  }

  best[idx(n, m)] = 0.0;
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n && j == m) continue;
      double b = std::numeric_limits<double>::infinity();
      if (i < n && j < m) b = std::min(b, sub[idx(i, j)] + best[idx(i + 1, j + 1)]);
      for (std::size_t k = 2; k <= cost::kMaxTranspose; ++k) {
        if (transposable(src, i, trg, j, k)) b = std::min(b, transpose_cost(k) + best[idx(i + k, j + k)]);
      }
      if (i < n) b = std::min(b, cost::kIndel + best[idx(i + 1, j)]);
      if (j < m) b = std::min(b, cost::kIndel + best[idx(i, j + 1)]);
      best[idx(i, j)] = b;
    }
  }

  std::vector<AlignmentOp> ops;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    const double target = best[idx(i, j)];
    if (i < n && j < m && sub[idx(i, j)] + best[idx(i + 1, j + 1)] == target &&
        src[i].surface == trg[j].surface) {
      ops.push_back({OpKind::Match, {i, i + 1}, {j, j + 1}, 0.0});
      ++i, ++j;
      continue;
    }
    bool moved = false;
    for (std::size_t k = 2; k <= cost::kMaxTranspose && !moved; ++k) {
      if (transposable(src, i, trg, j, k) && transpose_cost(k) + best[idx(i + k, j + k)] == target) {
        ops.push_back({OpKind::Transpose, {i, i + k}, {j, j + k}, transpose_cost(k)});
        i += k, j += k;
        moved = true;
      }
    }
    if (moved) continue;
    if (i < n && j < m && sub[idx(i, j)] + best[idx(i + 1, j + 1)] == target) {
      ops.push_back({OpKind::Sub, {i, i + 1}, {j, j + 1}, sub[idx(i, j)]});
      ++i, ++j;
    } else if (i < n && cost::kIndel + best[idx(i + 1, j)] == target) {
      ops.push_back({OpKind::Del, {i, i + 1}, {j, j}, cost::kIndel});
      ++i;
    } else {
      ops.push_back({OpKind::Ins, {i, i}, {j, j + 1}, cost::kIndel});
      ++j;
    }
  }
  return ops;
}

/// Sum of op costs, accumulated from the last op backwards (the order in
/// which align() builds its table).
inline double total_cost(const std::vector<AlignmentOp>& ops) {
  double total = 0.0;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) total = it->cost + total;
  return total;
}

enum class MergeMode {
  /// Contiguous non-matches form one edit, except that a run made only of
  /// substitutions is split token by token and transpositions stand alone.
  Merge,
  /// Every non-match op is its own edit.
  AllSplit,
};

inline std::vector<EditSpan> merge_ops(const std::vector<AlignmentOp>& ops, const AnnotatedSentence& src,
                                       const AnnotatedSentence& trg, MergeMode mode = MergeMode::Merge) {
  std::vector<EditSpan> spans;
  auto emit = [&](std::size_t first, std::size_t last) {  // ops[first, last)
    EditSpan e;
    e.src = {ops[first].src.begin, ops[last - 1].src.end};
    e.trg = {ops[first].trg.begin, ops[last - 1].trg.end};
    e.src_tokens.assign(src.tokens.begin() + static_cast<std::ptrdiff_t>(e.src.begin),
                        src.tokens.begin() + static_cast<std::ptrdiff_t>(e.src.end));
    e.trg_tokens.assign(trg.tokens.begin() + static_cast<std::ptrdiff_t>(e.trg.begin),
                        trg.tokens.begin() + static_cast<std::ptrdiff_t>(e.trg.end));
    spans.push_back(std::move(e));
  };
  auto emit_run = [&](std::size_t first, std::size_t last) {
    if (first == last) return;
    const bool only_subs = std::all_of(ops.begin() + static_cast<std::ptrdiff_t>(first),
                                       ops.begin() + static_cast<std::ptrdiff_t>(last),
                                       [](const AlignmentOp& op) { return op.kind == OpKind::Sub; });
    if (mode == MergeMode::AllSplit || only_subs) {
      for (std::size_t k = first; k < last; ++k) emit(k, k + 1);
    } else {
      emit(first, last);
    }
  };

  std::size_t run_start = 0;
  for (std::size_t k = 0; k <= ops.size(); ++k) {
    const bool boundary = k == ops.size() || ops[k].kind == OpKind::Match || ops[k].kind == OpKind::Transpose;
    if (!boundary) continue;
    emit_run(run_start, k);
    if (k < ops.size() && ops[k].kind == OpKind::Transpose) emit(k, k + 1);
    run_start = k + 1;
  }
  return spans;
}

}  // namespace peet
