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

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "peet/corpus_io.hpp"
#include "peet/errors.hpp"
#include "peet/rng.hpp"

namespace peet {

inline constexpr std::size_t kMaxBatchSize = 50;

struct AnnotationItem {
  std::string item_id;
  std::string source;
  std::optional<std::string> first_pass;
  std::string variation = "SRC";

  /// The text placed in front of the editor.
  const std::string& shown() const { return first_pass ? *first_pass : source; }
  bool operator==(const AnnotationItem&) const = default;
};

inline nlohmann::json to_json(const AnnotationItem& item) {
  nlohmann::json j{{"item_id", item.item_id}, {"source", item.source}, {"variation", item.variation}};
  if (item.first_pass) j["first_pass"] = *item.first_pass;
  return j;
}

inline AnnotationItem item_from_json(const nlohmann::json& j) {
  try {
    AnnotationItem item;
    item.item_id = j.at("item_id").get<std::string>();
    item.source = j.at("source").get<std::string>();
    if (j.contains("first_pass") && !j.at("first_pass").is_null()) item.first_pass = j.at("first_pass").get<std::string>();
    item.variation = j.value("variation", item.first_pass ? std::string("GEC") : std::string("SRC"));
    if (text::trim(item.source).empty()) throw data_error("EmptySource", "item '" + item.item_id + "' has no source");
    return item;
  } catch (const nlohmann::json::exception& e) {
    throw data_error("MalformedRecord", e.what());
  }
}

/// One JSON item per line; at most 50 items.
inline std::vector<AnnotationItem> parse_batch(std::string_view content) {
  std::vector<AnnotationItem> items;
  std::size_t line_no = 0;
  for (const auto& line : text::split_lines(content)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw data_error("MalformedRecord", "batch line " + std::to_string(line_no) + " is not JSON");
    }
    items.push_back(item_from_json(j));
  }
  if (items.empty()) throw data_error("EmptyInput", "batch has no items");
  if (items.size() > kMaxBatchSize) {
    throw data_error("BatchTooLarge", "batch has " + std::to_string(items.size()) + " items; the limit is 50");
  }
  return items;
}

struct Assignment {
  std::string item_id;
  std::string variation;
  std::string editor;
  bool operator==(const Assignment&) const = default;
};

struct AssignmentPlan {
  std::vector<Assignment> entries;
};

/// Gives each (item, variation) pair an editor so that no editor sees two
/// variations of one item. Each item takes the least-loaded editors, with
/// ties broken by a seeded shuffle.
inline AssignmentPlan plan_assignments(const std::vector<std::string>& item_ids,
                                       const std::vector<std::string>& variations,
                                       const std::vector<std::string>& editors, std::uint64_t seed = kDefaultSeed) {
  if (editors.size() < variations.size()) {
    throw usage_error("TooFewEditors", std::to_string(variations.size()) + " variations need at least as many editors; got " +
                                           std::to_string(editors.size()));
  }
  Rng rng(seed);
  std::vector<std::size_t> load(editors.size(), 0);
  AssignmentPlan plan;
  for (const auto& id : item_ids) {
    std::vector<std::size_t> order(editors.size());
    for (std::size_t e = 0; e < order.size(); ++e) order[e] = e;
    rng.shuffle(order);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return load[a] < load[b]; });
    for (std::size_t v = 0; v < variations.size(); ++v) {
      const auto e = order[v];
      ++load[e];
      plan.entries.push_back({id, variations[v], editors[e]});
    }
  }
  return plan;
}

struct Submission {
  std::string correction;
  std::int64_t elapsed_ms = 0;
  std::string server_received_at;
};

struct Session {
  std::string session_id;
  std::string editor;
  std::string batch_file;
  std::vector<AnnotationItem> items;
  std::vector<Submission> submissions;

  std::size_t cursor() const { return submissions.size(); }
  bool complete() const { return submissions.size() == items.size(); }
};

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
  char out[40];
  std::snprintf(out, sizeof out, "%s.%03dZ", buf, static_cast<int>(ms));
  return out;
}

inline TimeRecord time_record_of(const Session& s, std::size_t index) {
  const auto& item = s.items[index];
  const auto& sub = s.submissions[index];
  TimeRecord r;
  r.id = item.item_id;
  r.variation = Variation::parse(item.variation);
  r.editor = s.editor;
  r.source = item.shown();
  r.correction = sub.correction;
  r.seconds = static_cast<double>(sub.elapsed_ms) / 1000.0;
  return r;
}

/// Accepts the submission for the item at the cursor and advances it.
inline TimeRecord record_submission(Session& s, std::size_t item_index, std::string correction, std::int64_t elapsed_ms,
                                    std::string received_at = utc_timestamp()) {
  if (s.complete()) throw usage_error("SessionComplete", "every item in this session has been submitted");
  if (item_index != s.cursor()) {
    throw usage_error("OutOfOrder", "expected item " + std::to_string(s.cursor()) + ", got " + std::to_string(item_index));
  }
  if (elapsed_ms < 0) throw usage_error("NegativeTime", "elapsed_ms must be nonnegative");
  s.submissions.push_back({std::move(correction), elapsed_ms, std::move(received_at)});
  return time_record_of(s, item_index);
}

inline std::string export_session(const Session& s, bool partial = false) {
  if (!partial && !s.complete()) {
    throw usage_error("IncompleteSession", std::to_string(s.cursor()) + " of " + std::to_string(s.items.size()) +
                                               " items submitted");
  }
  std::vector<TimeRecord> records;
  for (std::size_t i = 0; i < s.cursor(); ++i) records.push_back(time_record_of(s, i));
  return emit_time_annotations(records);
}

/// Sessions keyed by id, each persisted as an append-only JSONL journal in
/// `journal_dir` and reloaded on construction.
class SessionStore {
 public:
  SessionStore(std::filesystem::path batch_dir, std::filesystem::path journal_dir)
      : batch_dir_(std::move(batch_dir)), journal_dir_(std::move(journal_dir)) {
    std::filesystem::create_directories(journal_dir_);
    for (const auto& entry : std::filesystem::directory_iterator(journal_dir_)) {
      if (entry.path().extension() == ".jsonl") load_journal(entry.path());
    }
  }

  std::string create(const std::string& editor, const std::string& batch_file) {
    if (text::trim(editor).empty()) throw usage_error("MissingEditor", "editor name is required");
    const auto items = parse_batch(read_file(resolve_batch(batch_file)));
    std::unique_lock lock(map_mutex_);
    std::string id;
    do {
      id = "session-" + std::to_string(++counter_);
    } while (sessions_.count(id) > 0);
    auto entry = std::make_unique<Entry>();
    entry->session = {id, editor, batch_file, items, {}};
    nlohmann::json head{{"type", "open"}, {"session_id", id}, {"editor", editor}, {"batch_file", batch_file}};
    head["items"] = nlohmann::json::array();
    for (const auto& item : items) head["items"].push_back(to_json(item));
    append(id, head);
    sessions_.emplace(id, std::move(entry));
    return id;
  }

  /// Next item as {item_index, source, first_pass?} or {done: true}.
  nlohmann::json next(const std::string& id) {
    auto& e = entry(id);
    std::lock_guard lock(e.mutex);
    const auto& s = e.session;
    if (s.complete()) return {{"done", true}, {"total", s.items.size()}};
    const auto& item = s.items[s.cursor()];
    nlohmann::json j{{"item_index", s.cursor()}, {"item_id", item.item_id}, {"source", item.source},
                     {"total", s.items.size()}, {"done", false}};
    if (item.first_pass) j["first_pass"] = *item.first_pass;
    return j;
  }

  TimeRecord submit(const std::string& id, std::size_t item_index, const std::string& correction,
                    std::int64_t elapsed_ms) {
    auto& e = entry(id);
    std::lock_guard lock(e.mutex);
    auto record = record_submission(e.session, item_index, correction, elapsed_ms);
    const auto& sub = e.session.submissions.back();
    append(id, {{"type", "submit"},
                {"item_index", item_index},
                {"correction", sub.correction},
                {"elapsed_ms", sub.elapsed_ms},
                {"server_received_at", sub.server_received_at}});
    return record;
  }

  std::string export_jsonl(const std::string& id, bool partial) {
    auto& e = entry(id);
    std::lock_guard lock(e.mutex);
    return export_session(e.session, partial);
  }

  Session snapshot(const std::string& id) {
    auto& e = entry(id);
    std::lock_guard lock(e.mutex);
    return e.session;
  }

  std::vector<std::string> ids() const {
    std::shared_lock lock(map_mutex_);
    std::vector<std::string> out;
    for (const auto& [id, e] : sessions_) out.push_back(id);
    return out;
  }

 private:
  struct Entry {
    std::mutex mutex;
    Session session;
  };

  std::filesystem::path resolve_batch(const std::string& batch_file) const {
    const std::filesystem::path p(batch_file);
    if (batch_file.empty() || p.is_absolute()) throw usage_error("BadBatchPath", "batch_file must be a relative path");
    for (const auto& part : p) {
      if (part == "..") throw usage_error("BadBatchPath", "batch_file may not leave the batch directory");
    }
    return batch_dir_ / p;
  }

  Entry& entry(const std::string& id) {
    std::shared_lock lock(map_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw usage_error("UnknownSession", "no session '" + id + "'");
    return *it->second;
  }

  void append(const std::string& id, const nlohmann::json& event) {
    std::ofstream out(journal_dir_ / (id + ".jsonl"), std::ios::app | std::ios::binary);
    if (!out) throw data_error("JournalWrite", "cannot write the journal of '" + id + "'");
    out << event.dump() << '\n';
    out.flush();
  }

  void load_journal(const std::filesystem::path& path) {
    auto entry = std::make_unique<Entry>();
    auto& s = entry->session;
    for (const auto& line : text::split_lines(read_file(path))) {
      if (text::trim(line).empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error&) {
        continue;
      }
      const auto type = j.value("type", "");
      if (type == "open") {
        s.session_id = j.at("session_id").get<std::string>();
        s.editor = j.at("editor").get<std::string>();
        s.batch_file = j.value("batch_file", "");
        for (const auto& item : j.at("items")) s.items.push_back(item_from_json(item));
      } else if (type == "submit" && j.value("item_index", std::size_t{0}) == s.cursor() && !s.complete()) {
        s.submissions.push_back({j.at("correction").get<std::string>(), j.at("elapsed_ms").get<std::int64_t>(),
                                 j.value("server_received_at", "")});
      }
    }
    if (s.session_id.empty()) return;
    const auto prefix = std::string("session-");
    if (text::starts_with(s.session_id, prefix)) {
      try {
        counter_ = std::max(counter_, std::stoull(s.session_id.substr(prefix.size())));
      } catch (const std::exception&) {
      }
    }
    const auto id = s.session_id;
    sessions_.emplace(id, std::move(entry));
  }

  std::filesystem::path batch_dir_;
  std::filesystem::path journal_dir_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::unique_ptr<Entry>> sessions_;
  unsigned long long counter_ = 0;
};

inline int http_status(const Error& e) {
  if (e.code() == "UnknownSession") return 404;
  if (e.code() == "OutOfOrder" || e.code() == "SessionComplete" || e.code() == "IncompleteSession") return 409;
  return 400;
}

/// JSON-over-HTTP front end of a SessionStore.
class AnnotationServer {
 public:
  explicit AnnotationServer(SessionStore& store) : store_(store) { routes(); }

  /// Binds to `port` (0 picks a free one) and returns the bound port.
  int bind(const std::string& host, int port) {
    if (port == 0) return server_.bind_to_any_port(host);
    if (!server_.bind_to_port(host, port)) throw usage_error("BindFailed", "cannot bind " + host + ":" + std::to_string(port));
    return port;
  }
  bool listen() { return server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  void wait_until_ready() { server_.wait_until_ready(); }

 private:
  static void reply(httplib::Response& res, int status, const nlohmann::json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  template <class Fn>
  static void guarded(httplib::Response& res, Fn fn) {
    try {
      fn();
    } catch (const Error& e) {
      reply(res, http_status(e), {{"error", e.code()}, {"message", e.what()}});
    } catch (const nlohmann::json::exception& e) {
      reply(res, 400, {{"error", "MalformedRequest"}, {"message", e.what()}});
    }
  }

  static nlohmann::json body_of(const httplib::Request& req) {
    try {
      return nlohmann::json::parse(req.body);
    } catch (const nlohmann::json::parse_error&) {
      throw usage_error("MalformedRequest", "request body is not JSON");
    }
  }

  void routes() {
    server_.Get("/health", [](const httplib::Request&, httplib::Response& res) { reply(res, 200, {{"ok", true}}); });
    server_.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = body_of(req);
        const auto id = store_.create(body.at("editor").get<std::string>(), body.at("batch_file").get<std::string>());
        reply(res, 201, {{"session_id", id}});
      });
    });
    server_.Get(R"(/sessions/([^/]+)/next)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { reply(res, 200, store_.next(req.matches[1])); });
    });
    server_.Post(R"(/sessions/([^/]+)/submit)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = body_of(req);
        const auto index = body.at("item_index").get<std::int64_t>();
        if (index < 0) throw usage_error("OutOfOrder", "item_index must be nonnegative");
        const auto record = store_.submit(req.matches[1], static_cast<std::size_t>(index),
                                          body.at("correction").get<std::string>(),
                                          body.at("elapsed_ms").get<std::int64_t>());
        reply(res, 200, {{"ok", true}, {"seconds", record.seconds}});
      });
    });
    server_.Get(R"(/sessions/([^/]+)/export)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const bool partial = req.has_param("partial") && req.get_param_value("partial") != "0";
        res.status = 200;
        res.set_content(store_.export_jsonl(req.matches[1], partial), "application/x-ndjson");
      });
    });
  }

  SessionStore& store_;
  httplib::Server server_;
};

}  // namespace peet
