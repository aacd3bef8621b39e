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

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "peet/annotate.hpp"
#include "peet/classify.hpp"
#include "peet/rng.hpp"

#include "oracles.hpp"

namespace peet {
namespace {

using oracle::kClassifierCases;


TEST(Classifier, RuleSuite) {
  std::map<std::string, int> per_type;
  for (const auto& c : kClassifierCases) {
    const auto edits = extract_edits(annotate(c.src), annotate(c.trg));
    ASSERT_EQ(edits.size(), 1u) << c.src << " => " << c.trg;
    EXPECT_EQ(edits[0].label(), c.label) << c.src << " => " << c.trg;
    const std::string label = c.label;
    ++per_type[label.substr(2)];
  }
  EXPECT_EQ(per_type.size(), kEditTypes.size());
  for (auto t : kEditTypes) EXPECT_GE(per_type[std::string(type_name(t))], 2) << type_name(t);
}

TEST(Classifier, HandBuiltTokens) {
  auto one = [](AnnotatedToken a, AnnotatedToken b) {
    EditSpan e;
    e.src = {0, 1};
    e.trg = {0, 1};
    e.src_tokens = {std::move(a)};
    e.trg_tokens = {std::move(b)};
    return classify_type(e);
  };
  EXPECT_EQ(one({"eat", "eat", Pos::VERB}, {"ate", "eat", Pos::VERB}), EditType::VERB_TENSE);
  EXPECT_EQ(one({"recieve", "recieve", Pos::VERB}, {"receive", "receive", Pos::VERB}), EditType::SPELL);
  EditSpan comma;
  comma.src = {2, 2};
  comma.trg = {2, 3};
  comma.trg_tokens = {{",", ",", Pos::PUNCT}};
  EXPECT_EQ(classify_type(comma), EditType::PUNCT);
}

TEST(Classifier, TypeNamesRoundTrip) {
  for (auto t : kEditTypes) EXPECT_EQ(parse_type(type_name(t)), t);
  EXPECT_FALSE(parse_type("UNK").has_value());
}

TEST(Extraction, WorryPairGivesTwoReplacements) {
  const auto src = annotate(
      "Surrounded by such concerns , it is very likely that we are distracted to worry about these problems .");
  const auto mo = annotate(
      "Surrounded by such concerns , it is very likely that we are distracted from worrying about these problems .");
  const auto edits = extract_edits(src, mo);
  ASSERT_EQ(edits.size(), 2u);
  EXPECT_EQ(edits[0].span.src, (TokenRange{13, 14}));
  EXPECT_EQ(edits[0].correction(), "from");
  EXPECT_EQ(edits[0].label(), "R:PART");
  EXPECT_EQ(edits[1].span.src, (TokenRange{14, 15}));
  EXPECT_EQ(edits[1].correction(), "worrying");
  EXPECT_EQ(edits[1].label(), "R:VERB:FORM");

  const auto doc = to_m2_document(src, edits);
  EXPECT_EQ(emit_m2(doc).substr(emit_m2(doc).find("\nA ") + 1),
            "A 13 14|||R:PART|||from|||REQUIRED|||-NONE-|||0\nA 14 15|||R:VERB:FORM|||worrying|||REQUIRED|||-NONE-|||0\n");
}

TEST(Extraction, IdentityAndPureInsertion) {
  const auto s = annotate("a b");
  EXPECT_TRUE(extract_edits(s, s).empty());
  const auto e = extract_edits(s, annotate("a b c"));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].category, EditCategory::M);
}

const std::vector<std::string> kWords = {"the", "a",  "cat",  "cats", "is",     "are",  "went", "go", "to",  "from",
                                         ",",   ".",  "The",  "big",  "bigger", "he",   "him",  "and", "n't", "not",
                                         "'s",  "recieve", "receive", "quickly", "quick", "very", "Dog", "dog"};

std::string random_text(Rng& rng, std::size_t max_len) {
  std::string s;
  const auto n = rng.below(max_len + 1);
  for (std::size_t i = 0; i < n; ++i) s += kWords[rng.below(kWords.size())] + " ";
  return s;
}

TEST(Extraction, CategoryLawAndLabelsOnRandomPairs) {
  Rng rng(5);
  for (int c = 0; c < 300; ++c) {
    const auto s = annotate(random_text(rng, 7));
    const auto t = annotate(random_text(rng, 7));
    for (const auto& e : extract_edits(s, t)) {
      EXPECT_EQ(e.category == EditCategory::M, e.span.src.empty());
      EXPECT_EQ(e.category == EditCategory::U, e.span.trg.empty());
      EXPECT_EQ(e.label(), std::string(category_name(e.category)) + ":" + std::string(type_name(e.type)));
      EXPECT_TRUE(parse_type(type_name(e.type)).has_value());
    }
  }
}

EditSpan span_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  EditSpan e;
  e.src = {0, a.size()};
  e.trg = {0, b.size()};
  for (const auto& w : a) e.src_tokens.push_back(annotate_token(w));
  for (const auto& w : b) e.trg_tokens.push_back(annotate_token(w));
  return e;
}

TEST(Classifier, OrthAndWordOrderInvariants) {
  Rng rng(11);
  for (int c = 0; c < 300; ++c) {
    std::vector<std::string> a;
    const auto n = 1 + rng.below(4);
    for (std::size_t i = 0; i < n; ++i) a.push_back(kWords[rng.below(kWords.size())]);
    // case change on a random subset
    auto b = a;
    for (auto& w : b) {
      if (rng.below(2) == 0) w = text::to_lower(w);
      else if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 'a' + 'A');
    }
    if (b != a) {
      EXPECT_EQ(classify_type(span_of(a, b)), EditType::ORTH) << text::join(a, " ");
    }
    // permutation
    auto p = a;
    rng.shuffle(p);
    std::vector<std::string> la, lp;
    for (const auto& w : a) la.push_back(text::to_lower(w));
    for (const auto& w : p) lp.push_back(text::to_lower(w));
    if (la != lp && text::join(la, "") != text::join(lp, "")) {
      EXPECT_EQ(classify_type(span_of(a, p)), EditType::WO) << text::join(a, " ") << " / " << text::join(p, " ");
    }
  }
}

Edit make_edit(std::size_t b, std::size_t e, const std::string& corr, EditCategory cat) {
  Edit out;
  out.span.src = {b, e};
  for (const auto& w : text::split_tokens(corr)) out.span.trg_tokens.push_back(annotate_token(w));
  out.category = cat;
  return out;
}

// Set difference by exhaustive membership counting.
std::vector<Edit> brute_difference(const std::vector<Edit>& left, const std::vector<Edit>& right) {
  std::map<std::tuple<std::size_t, std::size_t, std::string, int>, int> budget;
  for (const auto& e : right) ++budget[{e.span.src.begin, e.span.src.end, e.correction(), static_cast<int>(e.category)}];
  std::vector<Edit> out;
  for (const auto& e : left) {
    auto& n = budget[{e.span.src.begin, e.span.src.end, e.correction(), static_cast<int>(e.category)}];
    if (n > 0) --n;
    else out.push_back(e);
  }
  return out;
}

TEST(Partition, Examples) {
  const auto e1 = make_edit(0, 1, "x", EditCategory::R);
  const auto e2 = make_edit(2, 2, "y", EditCategory::M);
  const auto e3 = make_edit(3, 4, "", EditCategory::U);
  auto p = edit_set_partition({e1, e2}, {e1, e2});
  EXPECT_TRUE(p.incorrect.empty());
  EXPECT_TRUE(p.ignored.empty());
  p = edit_set_partition({e1, e2}, {});
  EXPECT_EQ(p.incorrect.size(), 2u);
  EXPECT_TRUE(p.ignored.empty());
  p = edit_set_partition({e1, e2}, {e2, e3});
  ASSERT_EQ(p.incorrect.size(), 1u);
  EXPECT_EQ(p.incorrect[0], e1);
  ASSERT_EQ(p.ignored.size(), 1u);
  EXPECT_EQ(p.ignored[0], e3);
}

TEST(Partition, SameSpanDifferentTextIsDifferent) {
  const auto a = make_edit(0, 1, "x", EditCategory::R);
  const auto b = make_edit(0, 1, "z", EditCategory::R);
  const auto p = edit_set_partition({a}, {b});
  EXPECT_EQ(p.incorrect.size(), 1u);
  EXPECT_EQ(p.ignored.size(), 1u);
}

TEST(Partition, MatchesBruteForceOnRandomSets) {
  Rng rng(8);
  for (int c = 0; c < 200; ++c) {
    auto random_set = [&] {
      std::vector<Edit> s;
      const auto n = rng.below(5);
      for (std::size_t i = 0; i < n; ++i) {
        const auto b = rng.below(3);
        s.push_back(make_edit(b, b + rng.below(2), rng.below(2) ? "x" : "y", static_cast<EditCategory>(rng.below(3))));
      }
      return s;
    };
    const auto a = random_set();
    const auto m = random_set();
    const auto p = edit_set_partition(a, m);
    EXPECT_EQ(p.incorrect, brute_difference(a, m));
    EXPECT_EQ(p.ignored, brute_difference(m, a));
    const auto self = edit_set_partition(a, a);
    EXPECT_TRUE(self.incorrect.empty() && self.ignored.empty());
  }
}

}  // namespace
}  // namespace peet
