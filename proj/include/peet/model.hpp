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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "peet/corpus_io.hpp"
#include "peet/errors.hpp"
#include "peet/features.hpp"
#include "peet/gec_metrics.hpp"

namespace peet {

using Matrix = std::vector<std::vector<double>>;

enum class ModelKind { Ridge, SvrLinear };

inline std::string_view kind_name(ModelKind k) { return k == ModelKind::Ridge ? "ridge" : "svr_linear"; }

inline ModelKind parse_kind(std::string_view s) {
  const auto k = text::to_lower(s);
  if (k == "ridge" || k == "lr") return ModelKind::Ridge;
  if (k == "svr" || k == "svr_linear") return ModelKind::SvrLinear;
  throw usage_error("UnknownModelKind", "unknown model kind '" + std::string(s) + "'");
}

struct Hyper {
  double alpha = 1.0;
  double C = 1.0;
  double epsilon = 0.1;
};

struct LinearFit {
  std::vector<double> weights;
  double intercept = 0.0;
  bool converged = true;
  int epochs = 0;
};

namespace detail {

inline void check_shape(const Matrix& X, std::span<const double> y) {
  if (X.empty()) throw data_error("TooFewRows", "training matrix is empty");
  if (X.size() != y.size()) throw data_error("DimensionMismatch", "row count differs from target count");
  for (const auto& r : X) {
    if (r.size() != X.front().size()) throw data_error("DimensionMismatch", "ragged training matrix");
  }
}

inline Eigen::MatrixXd to_eigen(const Matrix& X) {
  Eigen::MatrixXd M(static_cast<Eigen::Index>(X.size()), static_cast<Eigen::Index>(X.front().size()));
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = 0; j < X[i].size(); ++j) M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = X[i][j];
  }
  return M;
}

}  // namespace detail

/// Minimizes ‖y − Xw − b‖² + alpha‖w‖² with b unpenalized, via centered
/// normal equations plus one step of iterative refinement.
inline LinearFit ridge_solve(const Matrix& X, std::span<const double> y, double alpha = 1.0) {
  detail::check_shape(X, y);
  if (!(alpha > 0)) throw usage_error("BadAlpha", "alpha must be positive");
  const auto A = detail::to_eigen(X);
  const Eigen::VectorXd Y = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));
  const Eigen::RowVectorXd mean_x = A.colwise().mean();
  const double mean_y = Y.mean();
  const Eigen::MatrixXd Ac = A.rowwise() - mean_x;
  const Eigen::VectorXd Yc = Y.array() - mean_y;

  Eigen::MatrixXd G = Ac.transpose() * Ac;
  G.diagonal().array() += alpha;
  const Eigen::VectorXd rhs = Ac.transpose() * Yc;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(G);
  if (ldlt.info() != Eigen::Success) throw numerical_error("SingularSystem", "normal equations could not be factored");
  Eigen::VectorXd w = ldlt.solve(rhs);
  w += ldlt.solve(rhs - G * w);
  if (!w.allFinite()) throw numerical_error("SingularSystem", "ridge solution is not finite");

  LinearFit fit;
  fit.weights.assign(w.data(), w.data() + w.size());
  fit.intercept = mean_y - mean_x.dot(w);
  return fit;
}

/// ‖Xᵀ(Xw + b − y) + alpha·w‖∞, the ridge optimality residual.
inline double ridge_stationarity(const Matrix& X, std::span<const double> y, const LinearFit& fit, double alpha) {
  const std::size_t d = fit.weights.size();
  std::vector<double> g(d, 0.0);
  for (std::size_t i = 0; i < X.size(); ++i) {
    double r = fit.intercept - y[i];
    for (std::size_t j = 0; j < d; ++j) r += X[i][j] * fit.weights[j];
    for (std::size_t j = 0; j < d; ++j) g[j] += X[i][j] * r;
  }
  double worst = 0;
  for (std::size_t j = 0; j < d; ++j) worst = std::max(worst, std::abs(g[j] + alpha * fit.weights[j]));
  return worst;
}

struct SvrOptions {
  double tolerance = 1e-3;
  int max_epochs = 10000;
};

/// Epsilon-insensitive linear SVR, ½‖w‖² + C·Σ max(0, |y − Xw − b| − ε),
/// by dual coordinate descent over rows in fixed order. The bias is learned
/// as the weight of an appended constant-one column. When the epoch limit
/// is reached the last iterate is returned with `converged` false.
inline LinearFit svr_solve(const Matrix& X, std::span<const double> y, double C = 1.0, double epsilon = 0.1,
                           SvrOptions opt = {}) {
  detail::check_shape(X, y);
  if (!(C > 0)) throw usage_error("BadC", "C must be positive");
  if (!(epsilon >= 0)) throw usage_error("BadEpsilon", "epsilon must be nonnegative");
  const std::size_t n = X.size(), d = X.front().size();
  std::vector<double> w(d + 1, 0.0), beta(n, 0.0), qd(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (double x : X[i]) qd[i] += x * x;
  }
  auto dot = [&](std::size_t i) {
    double s = w[d];
    for (std::size_t j = 0; j < d; ++j) s += w[j] * X[i][j];
    return s;
  };

  LinearFit fit;
  fit.converged = false;
  for (int epoch = 1; epoch <= opt.max_epochs; ++epoch) {
    double max_violation = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double g = dot(i) - y[i];
      const double gp = g + epsilon, gn = g - epsilon;
      const double b = beta[i];
      double violation = 0;
      if (b == 0) violation = gp < 0 ? -gp : (gn > 0 ? gn : 0);
      else if (b >= C) violation = std::max(0.0, gp);
      else if (b <= -C) violation = std::max(0.0, -gn);
      else if (b > 0) violation = std::abs(gp);
      else violation = std::abs(gn);
      max_violation = std::max(max_violation, violation);
      if (violation == 0) continue;

      const double h = qd[i];
      double z;
      if (gp < h * b) z = -gp / h;
      else if (gn > h * b) z = -gn / h;
      else z = -b;
      const double nb = std::clamp(b + z, -C, C);
      const double delta = nb - b;
      if (delta == 0) continue;
      beta[i] = nb;
      for (std::size_t j = 0; j < d; ++j) w[j] += delta * X[i][j];
      w[d] += delta;
    }
    fit.epochs = epoch;
    if (max_violation < opt.tolerance) {
      fit.converged = true;
      break;
    }
  }
  fit.weights.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
  fit.intercept = w[d];
  return fit;
}

struct PeetModel {
  ModelKind kind = ModelKind::Ridge;
  std::optional<FeatureLevel> level;
  std::vector<std::string> feature_names;
  Standardizer standardizer;
  std::vector<double> weights;
  double intercept = 0.0;
  Hyper hyper;
  bool converged = true;
};

/// Standardizes `rows`, then fits the chosen regressor on the z-scores.
inline PeetModel train_model(ModelKind kind, const std::vector<std::string>& names, const Matrix& rows,
                             std::span<const double> seconds, const Hyper& hyper = {}) {
  PeetModel m;
  m.kind = kind;
  m.feature_names = names;
  m.level = level_from_names(names);
  m.hyper = hyper;
  m.standardizer = fit_standardizer(names, rows);
  Matrix z;
  z.reserve(rows.size());
  for (const auto& r : rows) z.push_back(apply_standardizer(m.standardizer, std::span<const double>(r)));
  const auto fit = kind == ModelKind::Ridge ? ridge_solve(z, seconds, hyper.alpha)
                                            : svr_solve(z, seconds, hyper.C, hyper.epsilon);
  m.weights = fit.weights;
  m.intercept = fit.intercept;
  m.converged = fit.converged;
  return m;
}

inline PeetModel train_model(ModelKind kind, const FeatureTable& table, const Hyper& hyper = {}) {
  return train_model(kind, table.names, table.rows, table.seconds, hyper);
}

inline double predict_values(const PeetModel& m, std::span<const double> raw) {
  const auto z = apply_standardizer(m.standardizer, raw);
  double s = m.intercept;
  for (std::size_t j = 0; j < z.size(); ++j) s += m.weights[j] * z[j];
  return s;
}

inline double predict(const PeetModel& m, const FeatureVector& v) {
  if (v.names != m.feature_names) throw data_error("NameMismatch", "feature names differ from the model's");
  return predict_values(m, v.values);
}

struct EvalReport {
  double mae = 0.0;
  double pearson_r = 0.0;
  std::size_t n = 0;
};

inline EvalReport evaluate(const PeetModel& m, const Matrix& rows, std::span<const double> seconds) {
  if (rows.size() != seconds.size()) throw data_error("DimensionMismatch", "row count differs from target count");
  if (rows.size() < 2) throw data_error("TooFewRows", "evaluation needs at least 2 rows");
  std::vector<double> pred;
  pred.reserve(rows.size());
  double abs_sum = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    pred.push_back(predict_values(m, rows[i]));
    abs_sum += std::abs(pred.back() - seconds[i]);
  }
  EvalReport r;
  r.n = rows.size();
  r.mae = abs_sum / static_cast<double>(r.n);
  r.pearson_r = pearson(pred, seconds);
  return r;
}

inline EvalReport evaluate(const PeetModel& m, const FeatureTable& t) { return evaluate(m, t.rows, t.seconds); }

/// (name, weight) pairs by decreasing magnitude, ties by name.
inline std::vector<std::pair<std::string, double>> standardized_coefficients(const PeetModel& m) {
  std::vector<std::pair<std::string, double>> out;
  for (std::size_t j = 0; j < m.weights.size(); ++j) out.emplace_back(m.feature_names[j], m.weights[j]);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a.second), mb = std::abs(b.second);
    if (ma != mb) return ma > mb;
    return a.first < b.first;
  });
  return out;
}

inline nlohmann::json to_json(const PeetModel& m) {
  nlohmann::json j;
  j["kind"] = kind_name(m.kind);
  j["level"] = m.level ? nlohmann::json(level_name(*m.level)) : nlohmann::json(nullptr);
  j["feature_names"] = m.feature_names;
  j["means"] = m.standardizer.means;
  j["stds"] = m.standardizer.stds;
  j["binary_mask"] = m.standardizer.binary_mask;
  j["weights"] = m.weights;
  j["intercept"] = m.intercept;
  if (m.kind == ModelKind::Ridge) j["hyperparameters"] = {{"alpha", m.hyper.alpha}};
  else j["hyperparameters"] = {{"C", m.hyper.C}, {"epsilon", m.hyper.epsilon}};
  j["converged"] = m.converged;
  return j;
}

inline PeetModel model_from_json(const nlohmann::json& j) {
  try {
    PeetModel m;
    m.kind = parse_kind(j.at("kind").get<std::string>());
    if (!j.at("level").is_null()) m.level = parse_level(j.at("level").get<std::string>());
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    m.standardizer.names = m.feature_names;
    m.standardizer.means = j.at("means").get<std::vector<double>>();
    m.standardizer.stds = j.at("stds").get<std::vector<double>>();
    m.standardizer.binary_mask = j.at("binary_mask").get<std::vector<bool>>();
    m.weights = j.at("weights").get<std::vector<double>>();
    m.intercept = j.at("intercept").get<double>();
    const auto& h = j.at("hyperparameters");
    if (m.kind == ModelKind::Ridge) {
      m.hyper.alpha = h.at("alpha").get<double>();
    } else {
      m.hyper.C = h.at("C").get<double>();
      m.hyper.epsilon = h.at("epsilon").get<double>();
    }
    m.converged = j.value("converged", true);
    const auto d = m.feature_names.size();
    if (m.weights.size() != d || m.standardizer.means.size() != d || m.standardizer.stds.size() != d ||
        m.standardizer.binary_mask.size() != d) {
      throw data_error("MalformedModel", "model arrays differ in length");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw data_error("MalformedModel", e.what());
  }
}

inline std::string serialize_model(const PeetModel& m) { return to_json(m).dump(2) + "\n"; }

inline PeetModel parse_model(std::string_view content) {
  try {
    return model_from_json(nlohmann::json::parse(content));
  } catch (const nlohmann::json::parse_error& e) {
    throw data_error("MalformedModel", e.what());
  }
}

struct SeedRun {
  std::uint64_t seed = 0;
  EvalReport report;
};

struct ProtocolReport {
  std::vector<SeedRun> runs;
  double mean_r = 0.0;
  double std_r = 0.0;
  double mean_mae = 0.0;
  double std_mae = 0.0;
  PeetModel last_model;
};

/// Trains and tests on `seeds` random splits with seeds first_seed,
/// first_seed + 1, ...; reports mean and population std of r and MAE.
inline ProtocolReport repeated_splits(ModelKind kind, const FeatureTable& table, const Hyper& hyper, int seeds,
                                      std::uint64_t first_seed = kDefaultSeed, double train_ratio = 0.8) {
  if (seeds < 1) throw usage_error("BadSeeds", "need at least one seed");
  std::vector<std::size_t> index(table.size());
  std::iota(index.begin(), index.end(), std::size_t{0});
  ProtocolReport out;
  for (int s = 0; s < seeds; ++s) {
    const auto seed = first_seed + static_cast<std::uint64_t>(s);
    const auto split = split_dataset(index, train_ratio, seed);
    auto gather = [&](const std::vector<std::size_t>& ids, Matrix& rows, std::vector<double>& y) {
      for (auto i : ids) {
        rows.push_back(table.rows[i]);
        y.push_back(table.seconds[i]);
      }
    };
    Matrix train_rows, test_rows;
    std::vector<double> train_y, test_y;
    gather(split.train, train_rows, train_y);
    gather(split.test, test_rows, test_y);
    out.last_model = train_model(kind, table.names, train_rows, train_y, hyper);
    out.runs.push_back({seed, evaluate(out.last_model, test_rows, test_y)});
  }
  auto moments = [&](auto get, double& mean, double& sd) {
    mean = 0;
    for (const auto& r : out.runs) mean += get(r);
    mean /= static_cast<double>(out.runs.size());
    double var = 0;
    for (const auto& r : out.runs) var += (get(r) - mean) * (get(r) - mean);
    sd = std::sqrt(var / static_cast<double>(out.runs.size()));
  };
  moments([](const SeedRun& r) { return r.report.pearson_r; }, out.mean_r, out.std_r);
  moments([](const SeedRun& r) { return r.report.mae; }, out.mean_mae, out.std_mae);
  return out;
}

}  // namespace peet
