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

#include <vector>

#include "peet/annotate.hpp"
#include "peet/lexicon.hpp"

namespace peet {
namespace {

TEST(Lexicon, IrregularVerbFormsKeepTheirLemma) {
  const auto went = lexicon::analyze("went");
  EXPECT_EQ(went.lemma, "go");
  EXPECT_EQ(went.pos, Pos::VERB);
  EXPECT_EQ(went.verb_form, VerbForm::Past);

  const auto eaten = lexicon::analyze("eaten");
  EXPECT_EQ(eaten.lemma, "eat");
  EXPECT_EQ(eaten.verb_form, VerbForm::Participle);

  EXPECT_EQ(lexicon::analyze("was").verb_form, VerbForm::PastSingular);
  EXPECT_EQ(lexicon::analyze("were").verb_form, VerbForm::PastPlural);
  EXPECT_EQ(lexicon::analyze("is").verb_form, VerbForm::Present3sg);
}

TEST(Lexicon, RegularInflectionsAreGenerated) {
  const auto goes = lexicon::analyze("goes");
  EXPECT_EQ(goes.lemma, "go");
  EXPECT_EQ(goes.verb_form, VerbForm::Present3sg);

  const auto worrying = lexicon::analyze("worrying");
  EXPECT_EQ(worrying.lemma, "worry");
  EXPECT_EQ(worrying.verb_form, VerbForm::Gerund);

  const auto cats = lexicon::analyze("cats");
  EXPECT_EQ(cats.lemma, "cat");
  EXPECT_EQ(cats.pos, Pos::NOUN);
  EXPECT_TRUE(cats.plural);

  const auto bigger = lexicon::analyze("bigger");
  EXPECT_EQ(bigger.lemma, "big");
  EXPECT_EQ(bigger.degree, Degree::Comparative);

  const auto quickly = lexicon::analyze("quickly");
  EXPECT_EQ(quickly.pos, Pos::ADV);
  EXPECT_EQ(quickly.lemma, "quick");
}

TEST(Lexicon, IrregularBlocksRegularForm) {
  EXPECT_TRUE(lexicon::is_known("children"));
  EXPECT_FALSE(lexicon::is_known("childs"));
  EXPECT_TRUE(lexicon::is_known("ate"));
  EXPECT_FALSE(lexicon::is_known("eated"));
  EXPECT_EQ(lexicon::analyze("childs").lemma, "child");
}

TEST(Lexicon, ClosedClassesAndPunctuation) {
  EXPECT_EQ(lexicon::analyze("the").pos, Pos::DET);
  EXPECT_EQ(lexicon::analyze("of").pos, Pos::PREP);
  EXPECT_EQ(lexicon::analyze("they").pos, Pos::PRON);
  EXPECT_EQ(lexicon::analyze("and").pos, Pos::CONJ);
  EXPECT_EQ(lexicon::analyze("to").pos, Pos::PART);
  EXPECT_EQ(lexicon::analyze(",").pos, Pos::PUNCT);
  EXPECT_EQ(lexicon::analyze("n't").pos, Pos::CONTR);
  EXPECT_TRUE(lexicon::is_known("?!"));
  EXPECT_EQ(lexicon::analyze("1984").pos, Pos::OTHER);
}

TEST(Lexicon, UnknownWordsUseSuffixGuesses) {
  const auto a = lexicon::analyze("recieve");
  EXPECT_FALSE(a.known);
  EXPECT_FALSE(lexicon::is_known("recieve"));
  EXPECT_EQ(lexicon::analyze("zorbly").pos, Pos::ADV);
  EXPECT_EQ(lexicon::analyze("zorbing").pos, Pos::VERB);
}

TEST(Lexicon, CaseInsensitiveLookup) {
  EXPECT_EQ(lexicon::analyze("The").pos, Pos::DET);
  EXPECT_TRUE(lexicon::is_known("Surrounded"));
}

TEST(Lexicon, ContractionExpansions) {
  EXPECT_TRUE(lexicon::is_contraction("n't"));
  EXPECT_TRUE(lexicon::expands_to("n't", "not"));
  EXPECT_TRUE(lexicon::expands_to("'ll", "will"));
  EXPECT_FALSE(lexicon::expands_to("'ll", "are"));
  EXPECT_FALSE(lexicon::is_contraction("not"));
}

TEST(Lexicon, UposTagsFoldOntoCoarseSet) {
  EXPECT_EQ(parse_pos("AUX"), Pos::VERB);
  EXPECT_EQ(parse_pos("PROPN"), Pos::NOUN);
  EXPECT_EQ(parse_pos("ADP"), Pos::PREP);
  EXPECT_EQ(parse_pos("CCONJ"), Pos::CONJ);
  EXPECT_EQ(parse_pos("NUM"), Pos::OTHER);
  EXPECT_FALSE(parse_pos("XYZ").has_value());
}

TEST(Annotate, SplitsOnWhitespaceAndRebuildsRaw) {
  const auto s = annotate("  He  went\thome . ");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.raw, "He went home .");
  EXPECT_EQ(s[1].lemma, "go");
  EXPECT_EQ(s[3].pos, Pos::PUNCT);
  EXPECT_TRUE(annotate("").empty());
}

TEST(Annotate, SidecarValuesAreUsedVerbatim) {
  const std::vector<SidecarRow> rows = {{"Dogs", "dog", "NOUN"}, {"bark", "bark", "VERB"}};
  const auto s = annotate("Dogs bark", rows);
  EXPECT_EQ(s[0].lemma, "dog");
  EXPECT_EQ(s[1].pos, Pos::VERB);
}

TEST(Annotate, SidecarMismatchIsReported) {
  const std::vector<SidecarRow> one = {{"Dogs", "dog", "NOUN"}};
  try {
    annotate("Dogs bark", one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "AnnotationMismatch");
  }
  const std::vector<SidecarRow> wrong = {{"Cats", "cat", "NOUN"}, {"bark", "bark", "VERB"}};
  EXPECT_THROW(annotate("Dogs bark", wrong), Error);
  const std::vector<SidecarRow> bad_tag = {{"Dogs", "dog", "QQ"}, {"bark", "bark", "VERB"}};
  EXPECT_THROW(annotate("Dogs bark", bad_tag), Error);
}

TEST(Annotate, ParsesSidecarFile) {
  const auto s = parse_sidecar("He\the\tPRON\nran\trun\tVERB\n\nOk\tok\tINTJ\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].size(), 2u);
  EXPECT_EQ(s[0][1].lemma, "run");
  EXPECT_EQ(s[1][0].upos, "INTJ");
  EXPECT_THROW(parse_sidecar("He\tPRON\n"), Error);
}

}  // namespace
}  // namespace peet
