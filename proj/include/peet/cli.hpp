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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "peet/annotate.hpp"
#include "peet/classify.hpp"
#include "peet/corpus_io.hpp"
#include "peet/errors.hpp"
#include "peet/features.hpp"
#include "peet/gec_metrics.hpp"
#include "peet/model.hpp"
#include "peet/parallel.hpp"
#include "peet/ranking.hpp"
#include "peet/service.hpp"

namespace peet::cli {

/// A score in [0, 1] as a percentage with two decimals.
inline std::string percent(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * x);
  return buf;
}

inline std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

namespace detail {

struct Options {
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;

  std::string src, trg, orig, src_tags, trg_tags, out, records, seconds_file, level = "TYPE25";
  bool all_split = false;

  std::string features, kind = "ridge", model;
  double alpha = 1.0, C = 1.0, epsilon = 0.1, ratio = 0.8;
  int seeds = 1;

  std::string hyp, ref;
  double beta = 0.5;
  std::vector<std::string> sets;

  std::string systems, ref_agg = "min", metric = "peet";
  std::vector<std::string> refs;
  std::string ranking, hjr;

  double max_seconds = 250.0;
  bool merge = false, stats = false;

  std::string items;
  std::vector<std::string> variations, editors;

  std::string batch_dir = ".", journal_dir = "journals", host = "127.0.0.1";
  int port = 8080;
};

inline void emit(const Options& o, std::ostream& out, const std::string& content) {
  if (o.out.empty()) out << content;
  else write_file(o.out, content);
}

inline std::vector<AnnotatedSentence> annotate_lines(const std::vector<std::string>& lines, const std::string& tags_file,
                                                     unsigned jobs) {
  if (tags_file.empty()) {
    return parallel_map(lines.size(), jobs, [&](std::size_t i) { return annotate(lines[i]); });
  }
  const auto tags = parse_sidecar(read_file(tags_file));
  if (tags.size() != lines.size()) {
    throw data_error("AnnotationMismatch", tags_file + " has " + std::to_string(tags.size()) + " sentences, expected " +
                                               std::to_string(lines.size()));
  }
  return parallel_map(lines.size(), jobs, [&](std::size_t i) { return annotate(lines[i], tags[i]); });
}

inline std::vector<double> read_seconds(const std::string& path, std::size_t expected) {
  std::vector<double> out;
  std::size_t line = 0;
  for (const auto& l : text::split_lines(read_file(path))) {
    ++line;
    if (!text::trim(l).empty()) out.push_back(parse_double(l, line));
  }
  if (out.size() != expected) {
    throw data_error("LineCountMismatch", path + " has " + std::to_string(out.size()) + " values, expected " +
                                              std::to_string(expected));
  }
  return out;
}

inline int cmd_extract(const Options& o, std::ostream& out) {
  const auto pairs = parse_parallel(read_file(o.src), read_file(o.trg));
  std::vector<std::string> s, t;
  for (const auto& p : pairs) {
    s.push_back(p.source);
    t.push_back(p.target);
  }
  const auto as = annotate_lines(s, o.src_tags, o.jobs);
  const auto at = annotate_lines(t, o.trg_tags, o.jobs);
  const auto mode = o.all_split ? MergeMode::AllSplit : MergeMode::Merge;
  const auto docs = parallel_map(pairs.size(), o.jobs, [&](std::size_t i) {
    return to_m2_document(as[i], extract_edits(as[i], at[i], mode));
  });
  emit(o, out, emit_m2(docs));
  return 0;
}

inline int cmd_featurize(const Options& o, std::ostream& out) {
  const auto level = parse_level(o.level);
  FeatureTable table;
  table.names = feature_names(level);
  table.level = level;

  struct Triple {
    std::string orig, shown, fixed;
  };
  std::vector<Triple> rows;
  std::vector<double> seconds;
  if (!o.records.empty()) {
    const auto records = parse_time_annotations(read_file(o.records));
    std::map<std::string, std::string> originals;
    for (const auto& r : records) {
      if (r.variation.kind() == Variation::Kind::Src) originals.emplace(r.id, r.source);
    }
    for (const auto& r : records) {
      std::string orig = r.source;
      if (is_extended(level)) {
        const auto it = originals.find(r.id);
        if (it == originals.end()) throw data_error("MissingSource", "record " + r.id + " has no SRC variation");
        orig = it->second;
      }
      rows.push_back({orig, r.source, r.correction});
      seconds.push_back(r.seconds);
    }
  } else {
    if (o.src.empty() || o.trg.empty()) throw usage_error("MissingInput", "featurize needs --records or --src and --trg");
    const auto pairs = parse_parallel(read_file(o.src), read_file(o.trg));
    std::vector<std::string> origs;
    if (is_extended(level)) {
      if (o.orig.empty()) throw usage_error("MissingInput", "extended levels need --orig with the original sources");
      origs = text::split_lines(read_file(o.orig));
      if (origs.size() != pairs.size()) throw data_error("LineCountMismatch", "--orig line count differs from --src");
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      rows.push_back({origs.empty() ? pairs[i].source : origs[i], pairs[i].source, pairs[i].target});
    }
    seconds = o.seconds_file.empty() ? std::vector<double>(pairs.size(), 0.0) : read_seconds(o.seconds_file, pairs.size());
  }

  const auto vectors = parallel_map(rows.size(), o.jobs, [&](std::size_t i) {
    const auto shown = annotate(rows[i].shown);
    const auto fixed = annotate(rows[i].fixed);
    if (is_extended(level)) return featurize_extended(annotate(rows[i].orig), shown, fixed, level);
    return featurize(extract_edits(shown, fixed), shown, fixed, level);
  });
  for (const auto& v : vectors) table.rows.push_back(v.values);
  table.seconds = seconds;
  emit(o, out, emit_feature_csv(table));
  return 0;
}

inline Hyper hyper_of(const Options& o) { return {o.alpha, o.C, o.epsilon}; }

inline nlohmann::json protocol_json(const ProtocolReport& r, const Options& o, const FeatureTable& t) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& run : r.runs) runs.push_back({{"seed", run.seed}, {"pearson_r", run.report.pearson_r}, {"mae", run.report.mae}});
  return {{"kind", kind_name(parse_kind(o.kind))},
          {"level", t.level ? nlohmann::json(level_name(*t.level)) : nlohmann::json(nullptr)},
          {"seeds", r.runs.size()},
          {"mean_r", r.mean_r},
          {"std_r", r.std_r},
          {"mean_mae", r.mean_mae},
          {"std_mae", r.std_mae},
          {"runs", runs}};
}

inline int cmd_train(const Options& o, std::ostream& out, std::ostream& err) {
  const auto table = parse_feature_csv(read_file(o.features));
  const auto kind = parse_kind(o.kind);
  PeetModel model;
  nlohmann::json report;
  if (o.seeds == 0) {
    model = train_model(kind, table, hyper_of(o));
    report = {{"kind", kind_name(kind)}, {"rows", table.size()}};
  } else {
    const auto r = repeated_splits(kind, table, hyper_of(o), o.seeds, o.seed, o.ratio);
    model = r.last_model;
    report = protocol_json(r, o, table);
  }
  if (!model.converged) err << "warning: SVR stopped at the epoch limit before converging\n";
  if (!o.model.empty()) write_file(o.model, serialize_model(model));
  out << report.dump(2) << "\n";
  return 0;
}

inline int cmd_predict(const Options& o, std::ostream& out) {
  const auto model = parse_model(read_file(o.model));
  std::vector<double> pred;
  if (!o.features.empty()) {
    const auto table = parse_feature_csv(read_file(o.features));
    if (table.names != model.feature_names) throw data_error("NameMismatch", "feature columns differ from the model's");
    pred = parallel_map(table.size(), o.jobs, [&](std::size_t i) { return predict_values(model, table.rows[i]); });
  } else {
    if (o.src.empty() || o.trg.empty()) throw usage_error("MissingInput", "predict needs --features or --src and --trg");
    const auto pairs = parse_parallel(read_file(o.src), read_file(o.trg));
    pred = parallel_map(pairs.size(), o.jobs, [&](std::size_t i) {
      return estimate_seconds(model, pairs[i].source, pairs[i].target);
    });
  }
  std::string csv = "predicted_seconds\n";
  for (double p : pred) csv += format_number(p) + "\n";
  emit(o, out, csv);
  return 0;
}

inline int cmd_evaluate(const Options& o, std::ostream& out) {
  const auto table = parse_feature_csv(read_file(o.features));
  if (o.model.empty()) {
    const auto r = repeated_splits(parse_kind(o.kind), table, hyper_of(o), std::max(o.seeds, 1), o.seed, o.ratio);
    out << protocol_json(r, o, table).dump(2) << "\n";
    return 0;
  }
  const auto model = parse_model(read_file(o.model));
  if (table.names != model.feature_names) throw data_error("NameMismatch", "feature columns differ from the model's");
  const auto r = evaluate(model, table);
  out << nlohmann::json{{"n", r.n}, {"mae", r.mae}, {"pearson_r", r.pearson_r}}.dump(2) << "\n";
  return 0;
}

inline int cmd_coefficients(const Options& o, std::ostream& out) {
  const auto model = parse_model(read_file(o.model));
  std::string csv = "feature,coefficient\n";
  for (const auto& [name, w] : standardized_coefficients(model)) csv += name + "," + fixed(w, 4) + "\n";
  emit(o, out, csv);
  return 0;
}

/// Edits of the first annotator in each block.
inline std::vector<std::vector<M2Edit>> first_annotator(const std::vector<M2Document>& docs) {
  std::vector<std::vector<M2Edit>> out;
  for (const auto& d : docs) out.push_back(d.annotations.empty() ? std::vector<M2Edit>{} : d.annotations.begin()->second);
  return out;
}

inline int cmd_score_gec(const Options& o, std::ostream& out) {
  const auto hyp = parse_m2(read_file(o.hyp));
  const auto ref = parse_m2(read_file(o.ref));
  if (hyp.size() != ref.size()) throw data_error("LengthMismatch", "hypothesis and reference M2 differ in sentence count");
  std::vector<std::vector<std::vector<M2Edit>>> refs;
  for (const auto& d : ref) {
    std::vector<std::vector<M2Edit>> per;
    for (const auto& [annotator, edits] : d.annotations) per.push_back(edits);
    refs.push_back(std::move(per));
  }
  const auto r = multi_ref_score(first_annotator(hyp), refs, o.beta);
  out << "tp,fp,fn,precision,recall,f\n"
      << r.counts.tp << "," << r.counts.fp << "," << r.counts.fn << "," << percent(r.prf.precision) << ","
      << percent(r.prf.recall) << "," << percent(r.prf.f) << "\n";
  return 0;
}

inline int cmd_iaa(const Options& o, std::ostream& out) {
  std::vector<std::vector<std::vector<M2Edit>>> sets;
  for (const auto& f : o.sets) sets.push_back(first_annotator(parse_m2(read_file(f))));
  const auto r = iaa(sets, o.seed);
  out << "set,score\n";
  for (std::size_t k = 0; k < r.scores.size(); ++k) out << o.sets[k] << "," << fixed(r.scores[k], 2) << "\n";
  out << "average," << fixed(r.average, 2) << "\n";
  return 0;
}

inline int cmd_wer(const Options& o, std::ostream& out) {
  const auto pairs = parse_parallel(read_file(o.hyp), read_file(o.ref));
  double sum = 0, edits = 0, words = 0;
  for (const auto& p : pairs) {
    const auto h = text::split_tokens(p.source);
    const auto r = text::split_tokens(p.target);
    sum += wer(h, r);
    edits += static_cast<double>(token_distance(h, r));
    words += static_cast<double>(r.size());
  }
  out << nlohmann::json{{"sentences", pairs.size()},
                        {"mean_wer", sum / static_cast<double>(pairs.size())},
                        {"corpus_wer", edits / words}}
             .dump(2)
      << "\n";
  return 0;
}

inline int cmd_rank(const Options& o, std::ostream& out) {
  if (o.refs.empty()) throw usage_error("MissingInput", "rank needs at least one --refs file");
  std::vector<std::vector<std::string>> ref_files;
  for (const auto& f : o.refs) ref_files.push_back(text::split_lines(read_file(f)));
  for (const auto& r : ref_files) {
    if (r.size() != ref_files.front().size()) throw data_error("LineCountMismatch", "reference files differ in length");
  }
  std::vector<std::vector<std::string>> refs(ref_files.front().size());
  for (std::size_t s = 0; s < refs.size(); ++s) {
    for (const auto& r : ref_files) refs[s].push_back(r[s]);
  }
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(o.systems)) throw data_error("FileNotFound", "no directory " + o.systems);
  for (const auto& e : std::filesystem::directory_iterator(o.systems)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw data_error("EmptyInput", "no system outputs in " + o.systems);
  const auto agg = parse_ref_aggregate(o.ref_agg);
  std::optional<PeetModel> model;
  if (o.metric == "peet") model = parse_model(read_file(o.model));
  else if (o.metric != "wer") throw usage_error("UnknownMetric", "metric must be 'peet' or 'wer'");
  std::vector<SystemScore> scores;
  for (const auto& f : files) {
    const auto outputs = text::split_lines(read_file(f));
    const auto name = f.stem().string();
    scores.push_back(model ? peet_score_system(*model, name, outputs, refs, agg, o.jobs)
                           : wer_score_system(name, outputs, refs, agg, o.jobs));
  }
  emit(o, out, emit_ranking_csv(rank_systems(scores)));
  return 0;
}

inline int cmd_correlate(const Options& o, std::ostream& out) {
  const auto c = correlate_with_hjr(parse_ranking_csv(read_file(o.ranking)), parse_hjr_csv(read_file(o.hjr)));
  out << nlohmann::json{{"spearman", c.spearman}, {"pearson", c.pearson}}.dump(2) << "\n";
  return 0;
}

inline int cmd_filter(const Options& o, std::ostream& out) {
  auto records = filter_by_time(parse_time_annotations(read_file(o.records)), o.max_seconds);
  if (o.merge) records = merge_duplicates(records);
  if (o.stats) {
    std::string csv = "variation,records,seconds_per_sentence,seconds_per_word\n";
    for (const auto& s : variation_stats(records)) {
      csv += s.variation + "," + std::to_string(s.records) + "," + fixed(s.mean_seconds_per_sentence, 2) + "," +
             fixed(s.mean_seconds_per_word, 2) + "\n";
    }
    emit(o, out, csv);
  } else {
    emit(o, out, emit_time_annotations(records));
  }
  return 0;
}

inline int cmd_assign(const Options& o, std::ostream& out) {
  std::vector<std::string> ids;
  for (const auto& l : text::split_lines(read_file(o.items))) {
    if (!text::trim(l).empty()) ids.emplace_back(text::trim(l));
  }
  const auto plan = plan_assignments(ids, o.variations, o.editors, o.seed);
  std::string csv = "item_id,variation,editor\n";
  for (const auto& a : plan.entries) csv += a.item_id + "," + a.variation + "," + a.editor + "\n";
  emit(o, out, csv);
  return 0;
}

inline int cmd_serve(const Options& o, std::ostream& err) {
  SessionStore store(o.batch_dir, o.journal_dir);
  AnnotationServer server(store);
  const int port = server.bind(o.host, o.port);
  err << "listening on " << o.host << ":" << port << std::endl;
  return server.listen() ? 0 : 2;
}

}  // namespace detail

/// Runs one command line (without the program name) and returns its exit
/// code: 0 success, 1 usage, 2 data or format, 3 numerical.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  detail::Options o;
  CLI::App app{"Post-editing effort estimation for grammatical error correction", "peet"};
  app.set_config("--config", "", "TOML or INI file with option defaults");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "random seed");

  auto* extract = app.add_subcommand("extract", "typed edits between parallel files, as M2");
  extract->add_option("--src", o.src, "source sentences")->required();
  extract->add_option("--trg", o.trg, "corrected sentences")->required();
  extract->add_option("--src-tags", o.src_tags, "token/lemma/UPOS rows for --src");
  extract->add_option("--trg-tags", o.trg_tags, "token/lemma/UPOS rows for --trg");
  extract->add_flag("--all-split", o.all_split, "one edit per alignment operation");
  extract->add_option("--out", o.out, "output file");

  auto* featurize = app.add_subcommand("featurize", "feature CSV from time records or parallel files");
  featurize->add_option("--records", o.records, "time records (JSONL)");
  featurize->add_option("--src", o.src, "text shown to the editor");
  featurize->add_option("--trg", o.trg, "text the editor produced");
  featurize->add_option("--orig", o.orig, "original sources, for extended levels");
  featurize->add_option("--seconds", o.seconds_file, "one time per line");
  featurize->add_option("--level", o.level, "COARSE4, TYPE25, FULL55, EXTENDED or EXTENDED_FULL");
  featurize->add_option("--out", o.out, "output file");

  auto add_model_options = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "ridge or svr");
    sub->add_option("--alpha", o.alpha, "ridge penalty")->check(CLI::PositiveNumber);
    sub->add_option("--C", o.C, "SVR cost")->check(CLI::PositiveNumber);
    sub->add_option("--epsilon", o.epsilon, "SVR tube half-width")->check(CLI::NonNegativeNumber);
    sub->add_option("--seeds", o.seeds, "random train/test splits")->check(CLI::NonNegativeNumber);
    sub->add_option("--ratio", o.ratio, "training share of each split");
  };
  auto* train = app.add_subcommand("train", "fit a model, reporting repeated-split scores");
  train->add_option("--features", o.features, "feature CSV")->required();
  train->add_option("--out", o.model, "model JSON of the last split");
  add_model_options(train);

  auto* predict = app.add_subcommand("predict", "predicted seconds per row or sentence pair");
  predict->add_option("--model", o.model, "model JSON")->required();
  predict->add_option("--features", o.features, "feature CSV");
  predict->add_option("--src", o.src, "text shown to the editor");
  predict->add_option("--trg", o.trg, "corrected text");
  predict->add_option("--out", o.out, "output file");

  auto* evaluate = app.add_subcommand("evaluate", "MAE and Pearson r of a model, or repeated-split scores");
  evaluate->add_option("--features", o.features, "feature CSV")->required();
  evaluate->add_option("--model", o.model, "model JSON; without it, model options are trained per split");
  add_model_options(evaluate);

  auto* coefficients = app.add_subcommand("coefficients", "standardized model coefficients");
  coefficients->add_option("--model", o.model, "model JSON")->required();
  coefficients->add_option("--out", o.out, "output file");

  auto* score = app.add_subcommand("score-gec", "span-based precision, recall and F");
  score->add_option("--hyp", o.hyp, "hypothesis M2")->required();
  score->add_option("--ref", o.ref, "reference M2, one annotator per reference")->required();
  score->add_option("--beta", o.beta, "F beta")->check(CLI::PositiveNumber);

  auto* agreement = app.add_subcommand("iaa", "each correction set scored against two others");
  agreement->add_option("sets", o.sets, "M2 files over the same sources")->required();

  auto* wer_cmd = app.add_subcommand("wer", "word error rate of parallel files");
  wer_cmd->add_option("--hyp", o.hyp, "hypothesis sentences")->required();
  wer_cmd->add_option("--ref", o.ref, "reference sentences")->required();

  auto* rank = app.add_subcommand("rank", "rank systems by estimated post-editing time");
  rank->add_option("--model", o.model, "model JSON");
  rank->add_option("--systems", o.systems, "directory of system outputs, one file per system")->required();
  rank->add_option("--refs", o.refs, "reference files, repeatable")->required();
  rank->add_option("--ref-agg", o.ref_agg, "min or mean over references");
  rank->add_option("--metric", o.metric, "peet or wer");
  rank->add_option("--out", o.out, "output file");

  auto* correlate = app.add_subcommand("correlate", "Spearman and Pearson against human scores");
  correlate->add_option("--ranking", o.ranking, "ranking CSV")->required();
  correlate->add_option("--hjr", o.hjr, "name,score CSV")->required();

  auto* filter = app.add_subcommand("filter-dataset", "drop slow records and merge duplicates");
  filter->add_option("--records", o.records, "time records (JSONL)")->required();
  filter->add_option("--max-seconds", o.max_seconds, "longest kept time");
  filter->add_flag("--merge", o.merge, "average records with the same source and correction");
  filter->add_flag("--stats", o.stats, "print per-variation averages instead of records");
  filter->add_option("--out", o.out, "output file");

  auto* assign = app.add_subcommand("assign", "editor for every item and variation");
  assign->add_option("--items", o.items, "item ids, one per line")->required();
  assign->add_option("--variations", o.variations, "variation labels")->required()->delimiter(',');
  assign->add_option("--editors", o.editors, "editor names")->required()->delimiter(',');
  assign->add_option("--out", o.out, "output file");

  auto* serve = app.add_subcommand("serve", "HTTP annotation service");
  serve->add_option("--batch-dir", o.batch_dir, "directory holding batch files");
  serve->add_option("--journal-dir", o.journal_dir, "directory for session journals");
  serve->add_option("--host", o.host, "bind address");
  serve->add_option("--port", o.port, "port, 0 for any free one");

  std::vector<const char*> argv{"peet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (extract->parsed()) return detail::cmd_extract(o, out);
    if (featurize->parsed()) return detail::cmd_featurize(o, out);
    if (train->parsed()) return detail::cmd_train(o, out, err);
    if (predict->parsed()) return detail::cmd_predict(o, out);
    if (evaluate->parsed()) return detail::cmd_evaluate(o, out);
    if (coefficients->parsed()) return detail::cmd_coefficients(o, out);
    if (score->parsed()) return detail::cmd_score_gec(o, out);
    if (agreement->parsed()) return detail::cmd_iaa(o, out);
    if (wer_cmd->parsed()) return detail::cmd_wer(o, out);
    if (rank->parsed()) return detail::cmd_rank(o, out);
    if (correlate->parsed()) return detail::cmd_correlate(o, out);
    if (filter->parsed()) return detail::cmd_filter(o, out);
    if (assign->parsed()) return detail::cmd_assign(o, out);
    if (serve->parsed()) return detail::cmd_serve(o, err);
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Usage: return 1;
      case ErrorKind::Data: return 2;
      case ErrorKind::Numerical: return 3;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace peet::cli
