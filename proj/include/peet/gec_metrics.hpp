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
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "peet/classify.hpp"
#include "peet/corpus_io.hpp"
#include "peet/errors.hpp"
#include "peet/rng.hpp"

namespace peet {

/// What two edits must share to count as the same correction: source span
/// and exact correction text.
struct EditKey {
  int start = 0;
  int end = 0;
  std::string correction;

  auto operator<=>(const EditKey&) const = default;
};

inline EditKey edit_key(const EditKey& k) { return k; }
inline EditKey edit_key(const M2Edit& e) { return {e.start, e.end, e.correction}; }
inline EditKey edit_key(const Edit& e) {
  return {static_cast<int>(e.span.src.begin), static_cast<int>(e.span.src.end), e.correction()};
}

template <class E>
std::vector<EditKey> edit_keys(const std::vector<E>& edits) {
  std::vector<EditKey> out;
  out.reserve(edits.size());
  for (const auto& e : edits) out.push_back(edit_key(e));
  return out;
}

struct MatchCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  MatchCounts& operator+=(const MatchCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  bool operator==(const MatchCounts&) const = default;
};

/// Each gold edit absorbs at most one hypothesis edit with the same key.
template <class H, class G>
MatchCounts match_edits(const std::vector<H>& hyp, const std::vector<G>& gold) {
  std::map<EditKey, std::int64_t> available;
  for (const auto& g : gold) ++available[edit_key(g)];
  MatchCounts c;
  for (const auto& h : hyp) {
    auto it = available.find(edit_key(h));
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++c.tp;
    }
  }
  c.fp = static_cast<std::int64_t>(hyp.size()) - c.tp;
  c.fn = static_cast<std::int64_t>(gold.size()) - c.tp;
  return c;
}

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
  double beta = 0.5;
};

inline PRF f_beta(const MatchCounts& c, double beta = 0.5) {
  PRF r;
  r.beta = beta;
  r.precision = c.tp + c.fp > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 0.0;
  r.recall = c.tp + c.fn > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn) : 0.0;
  const double b2 = beta * beta;
  const double denom = b2 * r.precision + r.recall;
  r.f = denom > 0 ? (1 + b2) * r.precision * r.recall / denom : 0.0;
  return r;
}

struct MultiRefResult {
  PRF prf;
  MatchCounts counts;
  std::vector<std::size_t> chosen;
};

namespace detail {

inline bool fewer_errors(const MatchCounts& a, const MatchCounts& b) {
  return std::tie(a.fp, a.fn) < std::tie(b.fp, b.fn);
}

inline double corpus_ratio(const std::vector<std::vector<MatchCounts>>& options, const std::vector<std::size_t>& pick,
                           double b2) {
  double num = 0, den = 0;
  for (std::size_t s = 0; s < options.size(); ++s) {
    const auto& c = options[s][pick[s]];
    num += (1 + b2) * static_cast<double>(c.tp);
    den += (1 + b2) * static_cast<double>(c.tp) + b2 * static_cast<double>(c.fn) + static_cast<double>(c.fp);
  }
  return den > 0 ? num / den : 0.0;
}

}  // namespace detail

/// Corpus score with one reference chosen per sentence. Choices start from
/// the best sentence-level F (ties: fewer fp, fewer fn, lower index) and are
/// then improved towards the maximum corpus F by parametric search, so the
/// result is never below any fixed choice of reference.
template <class H, class G>
MultiRefResult multi_ref_score(const std::vector<std::vector<H>>& hyp,
                               const std::vector<std::vector<std::vector<G>>>& refs, double beta = 0.5) {
  if (hyp.size() != refs.size()) throw data_error("LengthMismatch", "hypothesis and reference sentence counts differ");
  const double b2 = beta * beta;
  std::vector<std::vector<MatchCounts>> options(hyp.size());
  std::vector<std::size_t> pick(hyp.size(), 0);
  for (std::size_t s = 0; s < hyp.size(); ++s) {
    if (refs[s].empty()) throw data_error("NoReferences", "sentence " + std::to_string(s + 1) + " has no reference");
    for (const auto& r : refs[s]) options[s].push_back(match_edits(hyp[s], r));
    double best = -1;
    for (std::size_t k = 0; k < options[s].size(); ++k) {
      const double f = f_beta(options[s][k], beta).f;
      if (f > best || (f == best && detail::fewer_errors(options[s][k], options[s][pick[s]]))) {
        best = f;
        pick[s] = k;
      }
    }
  }

  double lambda = detail::corpus_ratio(options, pick, b2);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<std::size_t> next(pick);
    for (std::size_t s = 0; s < options.size(); ++s) {
      auto gain = [&](const MatchCounts& c) {
        const double num = (1 + b2) * static_cast<double>(c.tp);
        const double den = num + b2 * static_cast<double>(c.fn) + static_cast<double>(c.fp);
        return num - lambda * den;
      };
      double best = gain(options[s][pick[s]]);
      for (std::size_t k = 0; k < options[s].size(); ++k) {
        const double g = gain(options[s][k]);
        if (g > best + 1e-12) {
          best = g;
          next[s] = k;
        }
      }
    }
    const double candidate = detail::corpus_ratio(options, next, b2);
    if (!(candidate > lambda + 1e-15)) break;
    pick = std::move(next);
    lambda = candidate;
  }

  MultiRefResult out;
  out.chosen = pick;
  for (std::size_t s = 0; s < options.size(); ++s) out.counts += options[s][pick[s]];
  out.prf = f_beta(out.counts, beta);
  return out;
}

struct IaaResult {
  std::vector<double> scores;
  double average = 0.0;
};

/// Scores every correction set against two of the others (both others when
/// there are three sets, a seeded random pair otherwise). Scores are F0.5
/// ×100. `sets[k][s]` holds set k's edits for sentence s.
template <class E>
IaaResult iaa(const std::vector<std::vector<std::vector<E>>>& sets, std::uint64_t seed = kDefaultSeed) {
  if (sets.size() < 3) throw data_error("TooFewSets", "agreement needs at least 3 correction sets");
  const auto n = sets.front().size();
  for (const auto& s : sets) {
    if (s.size() != n) throw data_error("LengthMismatch", "correction sets cover different sentence counts");
  }
  Rng rng(seed);
  IaaResult out;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (j != k) others.push_back(j);
    }
    if (others.size() > 2) {
      rng.shuffle(others);
      others.resize(2);
      std::sort(others.begin(), others.end());
    }
    std::vector<std::vector<std::vector<E>>> refs(n);
    for (std::size_t s = 0; s < n; ++s) {
      for (auto j : others) refs[s].push_back(sets[j][s]);
    }
    out.scores.push_back(100.0 * multi_ref_score(sets[k], refs).prf.f);
  }
  out.average = std::accumulate(out.scores.begin(), out.scores.end(), 0.0) / static_cast<double>(out.scores.size());
  return out;
}

inline std::size_t token_distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

inline double wer(const std::vector<std::string>& hyp, const std::vector<std::string>& ref) {
  if (ref.empty()) throw data_error("EmptyReference", "word error rate needs a nonempty reference");
  return static_cast<double>(token_distance(hyp, ref)) / static_cast<double>(ref.size());
}

inline double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw data_error("LengthMismatch", "correlation inputs differ in length");
  if (xs.size() < 2) throw numerical_error("TooFewPoints", "correlation needs at least 2 points");
  const auto n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) throw numerical_error("ConstantInput", "correlation of a constant sequence");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

/// 1-based ranks; tied values share the mean of their positions.
inline std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

inline double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw data_error("LengthMismatch", "correlation inputs differ in length");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  return pearson(rx, ry);
}

}  // namespace peet
