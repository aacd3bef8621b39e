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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peet/errors.hpp"
#include "peet/lexicon.hpp"
#include "peet/text.hpp"

namespace peet {

struct AnnotatedToken {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::OTHER;

  bool operator==(const AnnotatedToken&) const = default;
};

/// A tokenized sentence; `raw` is always the surfaces joined by single spaces.
struct AnnotatedSentence {
  std::vector<AnnotatedToken> tokens;
  std::string raw;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const AnnotatedToken& operator[](std::size_t i) const { return tokens[i]; }
};

/// One row of a sidecar annotation file: surface, lemma, UPOS.
struct SidecarRow {
  std::string surface;
  std::string lemma;
  std::string upos;
};

inline AnnotatedToken annotate_token(std::string_view surface) {
  auto a = lexicon::analyze(surface);
  return AnnotatedToken{std::string(surface), std::move(a.lemma), a.pos};
}

inline AnnotatedSentence make_sentence(std::vector<AnnotatedToken> tokens) {
  AnnotatedSentence s;
  s.tokens = std::move(tokens);
  std::vector<std::string_view> surfaces;
  surfaces.reserve(s.tokens.size());
  for (const auto& t : s.tokens) surfaces.push_back(t.surface);
  s.raw = text::join(surfaces, " ");
  return s;
}

/// Annotates a pre-tokenized sentence with the embedded fallback annotator.
inline AnnotatedSentence annotate(std::string_view sentence) {
  std::vector<AnnotatedToken> tokens;
  for (const auto& surface : text::split_tokens(sentence)) tokens.push_back(annotate_token(surface));
  return make_sentence(std::move(tokens));
}

/// Annotates with externally supplied lemma/POS values taken verbatim. UPOS
/// tags are folded onto the coarse tag set.
inline AnnotatedSentence annotate(std::string_view sentence, std::span<const SidecarRow> sidecar) {
  const auto surfaces = text::split_tokens(sentence);
  if (surfaces.size() != sidecar.size()) {
    throw data_error("AnnotationMismatch", "sidecar has " + std::to_string(sidecar.size()) +
                                               " rows for a sentence of " + std::to_string(surfaces.size()) +
                                               " tokens");
  }
  std::vector<AnnotatedToken> tokens;
  tokens.reserve(surfaces.size());
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    if (sidecar[i].surface != surfaces[i]) {
      throw data_error("AnnotationMismatch", "sidecar token '" + sidecar[i].surface + "' does not match '" +
                                                 surfaces[i] + "' at position " + std::to_string(i));
    }
    const auto pos = parse_pos(sidecar[i].upos);
    if (!pos) throw data_error("AnnotationMismatch", "unknown POS tag '" + sidecar[i].upos + "'");
    tokens.push_back(AnnotatedToken{surfaces[i], sidecar[i].lemma, *pos});
  }
  return make_sentence(std::move(tokens));
}

/// Parses "surface<TAB>lemma<TAB>UPOS" rows; a blank line ends a sentence.
inline std::vector<std::vector<SidecarRow>> parse_sidecar(std::string_view content) {
  std::vector<std::vector<SidecarRow>> sentences;
  std::vector<SidecarRow> current;
  std::size_t line_no = 0;
  for (const auto& line : text::split_lines(content)) {
    ++line_no;
    if (text::trim(line).empty()) {
      sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    auto fields = text::split(line, "\t");
    if (fields.size() != 3) {
      throw data_error("MalformedLine", "sidecar line " + std::to_string(line_no) + " needs 3 tab-separated fields");
    }
    current.push_back(SidecarRow{std::move(fields[0]), std::move(fields[1]), std::move(fields[2])});
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

}  // namespace peet
