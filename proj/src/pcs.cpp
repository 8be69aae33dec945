#include "netembed/pcs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include <Eigen/SVD>

#include "netembed/classifiers.hpp"
#include "netembed/clustering.hpp"
#include "netembed/embedding.hpp"
#include "netembed/eigensolver.hpp"
#include "netembed/features.hpp"
#include "netembed/metrics.hpp"
#include "netembed/rng.hpp"
#include "netembed/splits.hpp"
#include "netembed/util.hpp"

namespace netembed {

QuantileBand quantile_band(std::vector<double> samples, double lo, double hi) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  if (!(lo >= 0.0 && lo <= 1.0 && hi >= 0.0 && hi <= 1.0))
    throw std::invalid_argument("quantiles must lie in [0,1]");
  std::sort(samples.begin(), samples.end());
  const auto interp = [&samples](double q) {
    const double h = q * static_cast<double>(samples.size() - 1);
    const std::size_t i = static_cast<std::size_t>(h);
    if (i + 1 >= samples.size()) return samples.back();
    return samples[i] + (h - static_cast<double>(i)) * (samples[i + 1] - samples[i]);
  };
  QuantileBand band;
  band.low = interp(lo);
  band.high = interp(hi);
  band.mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
              static_cast<double>(samples.size());
  return band;
}

std::string perturb_mode_name(PerturbMode mode) {
  return mode == PerturbMode::remove_edges ? "remove_edges" : "flip_pairs";
}

void ExperimentPlan::validate(bool has_labels) const {
  if (methods.empty()) throw std::invalid_argument("no methods in plan");
  for (const auto& m : methods) {
    if (!is_known_method(m.name))
      throw std::invalid_argument("unknown method '" + m.name + "'");
    m.train.validate();
    if (is_walk_method(m.name)) m.walk.validate();
  }
  if (tasks.empty()) throw std::invalid_argument("no tasks in plan");
  for (const auto& t : tasks) {
    if (t != "node_classification" && t != "link_prediction" && t != "clustering")
      throw std::invalid_argument("unknown task '" + t + "'");
  }
  if (dims.empty()) throw std::invalid_argument("no dimensions in plan");
  for (const int d : dims)
    if (d < 1) throw std::invalid_argument("dimensions must be >= 1");
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (cv_folds < 2) throw std::invalid_argument("cv_folds must be >= 2");
  for (const auto& m : models)
    if (m != "logistic" && m != "random_forest")
      throw std::invalid_argument("unknown downstream model '" + m + "'");
  for (const auto& [mode, frac] : perturbations) {
    (void)mode;
    if (!(frac >= 0.0 && frac <= 1.0))
      throw std::invalid_argument("perturbation fraction outside [0,1]");
  }
  if (!(link_test_fraction > 0.0 && link_test_fraction < 1.0))
    throw std::invalid_argument("link_test_fraction must lie in (0,1)");
  if (link_neg_ratio < 1) throw std::invalid_argument("link_neg_ratio must be >= 1");
  similarity_from_name(link_score);
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (forest_trees < 1) throw std::invalid_argument("forest_trees must be >= 1");
  if (kmeans_restarts < 1)
    throw std::invalid_argument("kmeans_restarts must be >= 1");

  const bool needs_class =
      std::find(tasks.begin(), tasks.end(), "node_classification") != tasks.end();
  const bool needs_cluster =
      std::find(tasks.begin(), tasks.end(), "clustering") != tasks.end();
  if (needs_class && !has_labels)
    throw std::invalid_argument("node_classification requires labels");
  if (needs_class && models.empty())
    throw std::invalid_argument("node_classification requires a downstream model");
  if (needs_cluster && cluster_k == 0 && !has_labels)
    throw std::invalid_argument("clustering requires labels or an explicit k");
}

namespace {

using CellKey = std::tuple<std::string, int, std::string, std::string,
                           std::string>;  // method, dim, task, model, metric

struct CellSamples {
  std::vector<double> values;
  int failures = 0;
  std::string first_error;
};

using CellMap = std::map<CellKey, CellSamples>;

void add_sample(CellMap& cells, const CellKey& key, double value) {
  cells[key].values.push_back(value);
}

void add_failure(CellMap& cells, const CellKey& key, const std::string& err) {
  CellSamples& cell = cells[key];
  ++cell.failures;
  if (cell.first_error.empty()) cell.first_error = err;
}

// Merge per-replication maps in replication order (thread-count invariant).
CellMap merge_cells(const std::vector<CellMap>& per_rep) {
  CellMap merged;
  for (const CellMap& rep : per_rep) {
    for (const auto& [key, cell] : rep) {
      CellSamples& into = merged[key];
      into.values.insert(into.values.end(), cell.values.begin(),
                         cell.values.end());
      into.failures += cell.failures;
      if (into.first_error.empty()) into.first_error = cell.first_error;
    }
  }
  return merged;
}

std::vector<ReportRow> rows_from_cells(const CellMap& cells,
                                       std::uint64_t base_seed) {
  std::vector<ReportRow> rows;
  rows.reserve(cells.size());
  for (const auto& [key, cell] : cells) {
    ReportRow row;
    std::tie(row.method, row.dim, row.task, row.model, row.metric) = key;
    row.samples = static_cast<int>(cell.values.size());
    row.seed = base_seed;
    if (cell.values.empty()) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.band = {nan, nan, nan};
      row.status = "failed: " + cell.first_error;
    } else {
      row.band = quantile_band(cell.values);
      row.status = cell.failures == 0
                       ? "ok"
                       : "partial(" + std::to_string(row.samples) + "): " +
                             cell.first_error;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t rep_seed(std::uint64_t base, int rep, const std::string& label) {
  return Rng(base)
      .split("replication")
      .split(static_cast<std::uint64_t>(rep))
      .split(label)
      .next_u64();
}

bool has_task(const ExperimentPlan& plan, const std::string& task) {
  return std::find(plan.tasks.begin(), plan.tasks.end(), task) !=
         plan.tasks.end();
}

int distinct_labels(const std::vector<int>& y) {
  return *std::max_element(y.begin(), y.end()) + 1;
}

std::string cell_tag(const MethodConfig& m, int dim) {
  return m.name + ":" + std::to_string(dim);
}

// Mean CV accuracy and macro-F1 over the folds for one downstream model.
std::pair<double, double> cv_scores(const Eigen::MatrixXd& features,
                                    const std::vector<int>& labels,
                                    const std::vector<std::vector<int>>& folds,
                                    const std::string& model, int forest_trees,
                                    std::uint64_t model_seed) {
  double acc_sum = 0.0, f1_sum = 0.0;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<int> train_rows;
    for (std::size_t o = 0; o < folds.size(); ++o)
      if (o != f)
        train_rows.insert(train_rows.end(), folds[o].begin(), folds[o].end());
    const std::vector<int>& test_rows = folds[f];

    Standardizer scaler;
    scaler.fit(features, train_rows);
    const Eigen::MatrixXd scaled = scaler.transform(features);

    Eigen::MatrixXd x_train(train_rows.size(), scaled.cols());
    Eigen::MatrixXd x_test(test_rows.size(), scaled.cols());
    std::vector<int> y_train(train_rows.size()), y_test(test_rows.size());
    for (std::size_t i = 0; i < train_rows.size(); ++i) {
      x_train.row(i) = scaled.row(train_rows[i]);
      y_train[i] = labels[train_rows[i]];
    }
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      x_test.row(i) = scaled.row(test_rows[i]);
      y_test[i] = labels[test_rows[i]];
    }

    std::vector<int> pred;
    if (model == "logistic") {
      const LogisticModel fit = fit_logistic(x_train, y_train);
      pred = predict_labels(logistic_probabilities(fit, x_test));
    } else {
      ForestConfig cfg;
      cfg.trees = forest_trees;
      const ForestModel fit = fit_random_forest(
          x_train, y_train, cfg,
          derive_seed(model_seed, "fold" + std::to_string(f)));
      pred = predict_labels(forest_probabilities(fit, x_test));
    }
    const ClassificationMetrics m = classification_metrics(pred, y_test);
    acc_sum += m.accuracy;
    f1_sum += m.macro_f1;
  }
  const double k = static_cast<double>(folds.size());
  return {acc_sum / k, f1_sum / k};
}

CellMap predictability_replication(const ExperimentPlan& plan, const Graph& g,
                                   const NodeMetadata& meta, int rep) {
  CellMap cells;
  const bool want_class = has_task(plan, "node_classification");
  const bool want_cluster = has_task(plan, "clustering");
  const bool want_link = has_task(plan, "link_prediction");
  // Split/model seeds freeze at replication 0 when reseed_splits is off.
  const int split_rep = plan.reseed_splits ? rep : 0;
  auto split_seed = [&](const std::string& label) {
    return rep_seed(plan.base_seed, split_rep, label);
  };

  std::vector<std::vector<int>> folds;
  if (want_class)
    folds = stratified_kfold(*meta.labels, plan.cv_folds, split_seed("cv"));

  for (const MethodConfig& method : plan.methods) {
    for (const int dim : plan.dims) {
      const std::string tag = cell_tag(method, dim);

      if (want_class || want_cluster) {
        Embedding emb;
        bool trained = false;
        std::string error;
        try {
          emb = train_method(g, method, dim,
                             rep_seed(plan.base_seed, rep, "train:" + tag));
          trained = true;
        } catch (const std::exception& e) {
          error = e.what();
        }

        if (want_class) {
          for (const std::string& model : plan.models) {
            const CellKey acc_key{method.name, dim, "node_classification",
                                  model, "accuracy"};
            const CellKey f1_key{method.name, dim, "node_classification",
                                 model, "macro_f1"};
            if (!trained) {
              add_failure(cells, acc_key, error);
              add_failure(cells, f1_key, error);
              continue;
            }
            try {
              const Eigen::MatrixXd features =
                  assemble_features(emb, meta, plan.use_covariates);
              const auto [acc, f1] =
                  cv_scores(features, *meta.labels, folds, model,
                            plan.forest_trees,
                            split_seed("model:" + model + ":" + tag));
              add_sample(cells, acc_key, acc);
              add_sample(cells, f1_key, f1);
            } catch (const std::exception& e) {
              add_failure(cells, acc_key, e.what());
              add_failure(cells, f1_key, e.what());
            }
          }
        }
        if (want_cluster) {
          const CellKey key{method.name, dim, "clustering", "kmeans", "ari"};
          if (!trained) {
            add_failure(cells, key, error);
          } else {
            try {
              const int k = plan.cluster_k > 0 ? plan.cluster_k
                                               : distinct_labels(*meta.labels);
              const KmeansResult km =
                  kmeans(emb.center, k, split_seed("kmeans:" + tag), 300,
                         plan.kmeans_restarts);
              add_sample(cells, key,
                         adjusted_rand_index(km.assignments, *meta.labels));
            } catch (const std::exception& e) {
              add_failure(cells, key, e.what());
            }
          }
        }
      }

      if (want_link) {
        const CellKey key{method.name, dim, "link_prediction",
                          "similarity_" + plan.link_score, "auc"};
        try {
          const LinkSplit split =
              link_split(g, plan.link_test_fraction, plan.link_neg_ratio,
                         split_seed("link"));
          const Embedding emb = train_method(
              split.train, method, dim,
              rep_seed(plan.base_seed, rep, "train_link:" + tag));
          const SimilarityKind kind = similarity_from_name(plan.link_score);
          std::vector<double> scores;
          std::vector<int> labels01;
          scores.reserve(split.test_positives.size() +
                         split.test_negatives.size());
          for (const auto& [u, v] : split.test_positives) {
            scores.push_back(
                similarity(emb.center.row(u), emb.center.row(v), kind));
            labels01.push_back(1);
          }
          for (const auto& [u, v] : split.test_negatives) {
            scores.push_back(
                similarity(emb.center.row(u), emb.center.row(v), kind));
            labels01.push_back(0);
          }
          add_sample(cells, key, auc(scores, labels01));
        } catch (const std::exception& e) {
          add_failure(cells, key, e.what());
        }
      }
    }
  }
  return cells;
}

}  // namespace

std::vector<ReportRow> run_predictability(const ExperimentPlan& plan,
                                          const Graph& g,
                                          const NodeMetadata& meta) {
  plan.validate(meta.labels.has_value());
  std::vector<CellMap> per_rep(plan.replications);
  parallel_chunks(static_cast<std::size_t>(plan.replications), plan.threads,
                  [&](std::size_t lo, std::size_t hi) {
                    for (std::size_t r = lo; r < hi; ++r)
                      per_rep[r] = predictability_replication(
                          plan, g, meta, static_cast<int>(r));
                  });
  return rows_from_cells(merge_cells(per_rep), plan.base_seed);
}

std::vector<TimingRow> run_computability(const ExperimentPlan& plan,
                                         const Graph& g,
                                         const NodeMetadata& meta) {
  plan.validate(meta.labels.has_value());
  std::vector<TimingRow> rows;
  const bool can_eval = meta.labels.has_value() && !plan.models.empty();

  for (const MethodConfig& method : plan.methods) {
    for (const int dim : plan.dims) {
      std::vector<double> walk_times, train_times, eval_times;
      // Replication -1 is the discarded warm-up.
      for (int r = -1; r < plan.computability_replications; ++r) {
        const std::string label =
            r < 0 ? "timing_warmup" : "timing" + std::to_string(r);
        StageSeconds measured;
        Embedding emb;
        try {
          emb = train_method(g, method, dim,
                             rep_seed(plan.base_seed, std::max(r, 0), label),
                             &measured);
        } catch (const std::exception&) {
          break;  // failures are reported by the predictability rows
        }
        double eval_seconds = 0.0;
        if (can_eval) {
          Stopwatch sw;
          const auto folds = stratified_kfold(
              *meta.labels, plan.cv_folds,
              rep_seed(plan.base_seed, std::max(r, 0), "timing_cv"));
          const Eigen::MatrixXd features =
              assemble_features(emb, meta, plan.use_covariates);
          cv_scores(features, *meta.labels, folds, plan.models.front(),
                    plan.forest_trees,
                    rep_seed(plan.base_seed, std::max(r, 0), "timing_model"));
          eval_seconds = sw.seconds();
        }
        if (r < 0) continue;
        if (is_walk_method(method.name)) walk_times.push_back(measured.walks);
        train_times.push_back(measured.train);
        if (can_eval) eval_times.push_back(eval_seconds);
      }
      const int threads =
          std::max(method.train.threads, method.walk.threads);
      auto push = [&](const std::string& stage, std::vector<double>& samples) {
        if (samples.empty()) return;
        TimingRow row;
        row.method = method.name;
        row.dim = dim;
        row.stage = stage;
        row.band = quantile_band(samples);
        row.samples = static_cast<int>(samples.size());
        row.threads = threads;
        rows.push_back(std::move(row));
      };
      push("walks", walk_times);
      push("train", train_times);
      push("evaluate", eval_times);
    }
  }
  return rows;
}

std::vector<ReportRow> run_stability(const ExperimentPlan& plan, const Graph& g,
                                     const NodeMetadata& meta) {
  plan.validate(meta.labels.has_value());
  const int reps = plan.replications;
  const bool scored = meta.labels.has_value() && !plan.models.empty();
  CellMap cells;

  for (const MethodConfig& method : plan.methods) {
    // accuracy[model][dim index][rep]
    std::map<std::string, std::vector<std::vector<double>>> accuracy;
    for (const auto& model : plan.models)
      accuracy[model].resize(plan.dims.size());

    for (std::size_t di = 0; di < plan.dims.size(); ++di) {
      const int dim = plan.dims[di];
      const std::string tag = cell_tag(method, dim);

      std::vector<Embedding> embeddings(reps);
      std::vector<std::string> train_errors(reps);
      parallel_chunks(
          static_cast<std::size_t>(reps), plan.threads,
          [&](std::size_t lo, std::size_t hi) {
            for (std::size_t r = lo; r < hi; ++r) {
              try {
                embeddings[r] = train_method(
                    g, method, dim,
                    rep_seed(plan.base_seed, static_cast<int>(r),
                             "train:" + tag));
              } catch (const std::exception& e) {
                train_errors[r] = e.what();
              }
            }
          });

      // Axis (a): drift across reseeded runs + metric spread.
      const CellKey drift_key{method.name, dim, "stability", "-",
                              "procrustes_drift_seed"};
      for (int r = 1; r < reps; ++r) {
        if (!train_errors[r].empty() || !train_errors[0].empty()) {
          add_failure(cells, drift_key,
                      train_errors[r].empty() ? train_errors[0]
                                              : train_errors[r]);
          continue;
        }
        add_sample(cells, drift_key,
                   procrustes_distance(embeddings[0].center,
                                       embeddings[r].center));
      }

      if (scored) {
        for (const std::string& model : plan.models) {
          const CellKey acc_key{method.name, dim, "stability", model,
                                "accuracy_seed"};
          std::vector<double>& acc_by_rep = accuracy[model][di];
          acc_by_rep.assign(reps,
                            std::numeric_limits<double>::quiet_NaN());
          std::vector<std::string> errors(reps);
          parallel_chunks(
              static_cast<std::size_t>(reps), plan.threads,
              [&](std::size_t lo, std::size_t hi) {
                for (std::size_t r = lo; r < hi; ++r) {
                  if (!train_errors[r].empty()) {
                    errors[r] = train_errors[r];
                    continue;
                  }
                  const int split_rep =
                      plan.reseed_splits ? static_cast<int>(r) : 0;
                  try {
                    const auto folds = stratified_kfold(
                        *meta.labels, plan.cv_folds,
                        rep_seed(plan.base_seed, split_rep, "cv"));
                    const Eigen::MatrixXd features = assemble_features(
                        embeddings[r], meta, plan.use_covariates);
                    acc_by_rep[r] =
                        cv_scores(features, *meta.labels, folds, model,
                                  plan.forest_trees,
                                  rep_seed(plan.base_seed, split_rep,
                                           "model:" + model + ":" + tag))
                            .first;
                  } catch (const std::exception& e) {
                    errors[r] = e.what();
                  }
                }
              });
          for (int r = 0; r < reps; ++r) {
            if (errors[r].empty())
              add_sample(cells, acc_key, acc_by_rep[r]);
            else
              add_failure(cells, acc_key, errors[r]);
          }
        }
      }

      // Axis (b): data perturbations, same training seed as the reference.
      for (const auto& [mode, fraction] : plan.perturbations) {
        const std::string suffix =
            perturb_mode_name(mode) + "_" + format_double(fraction);
        const CellKey pdrift_key{method.name, dim, "stability", "-",
                                 "procrustes_drift_" + suffix};
        std::vector<double> drifts(reps,
                                   std::numeric_limits<double>::quiet_NaN());
        std::vector<std::string> perrors(reps);
        std::vector<Embedding> perturbed(reps);
        parallel_chunks(
            static_cast<std::size_t>(reps), plan.threads,
            [&](std::size_t lo, std::size_t hi) {
              for (std::size_t r = lo; r < hi; ++r) {
                if (!train_errors[r].empty()) {
                  perrors[r] = train_errors[r];
                  continue;
                }
                try {
                  const Graph gp = perturb(
                      g, mode, fraction,
                      rep_seed(plan.base_seed, static_cast<int>(r),
                               "perturb:" + suffix));
                  perturbed[r] = train_method(
                      gp, method, dim,
                      rep_seed(plan.base_seed, static_cast<int>(r),
                               "train:" + tag));
                  drifts[r] = procrustes_distance(embeddings[r].center,
                                                  perturbed[r].center);
                } catch (const std::exception& e) {
                  perrors[r] = e.what();
                }
              }
            });
        for (int r = 0; r < reps; ++r) {
          if (perrors[r].empty())
            add_sample(cells, pdrift_key, drifts[r]);
          else
            add_failure(cells, pdrift_key, perrors[r]);
        }

        if (scored) {
          for (const std::string& model : plan.models) {
            const CellKey delta_key{method.name, dim, "stability", model,
                                    "accuracy_delta_" + suffix};
            for (int r = 0; r < reps; ++r) {
              if (!perrors[r].empty()) {
                add_failure(cells, delta_key, perrors[r]);
                continue;
              }
              const int split_rep = plan.reseed_splits ? r : 0;
              try {
                const auto folds = stratified_kfold(
                    *meta.labels, plan.cv_folds,
                    rep_seed(plan.base_seed, split_rep, "cv"));
                const Eigen::MatrixXd features = assemble_features(
                    perturbed[r], meta, plan.use_covariates);
                const double acc =
                    cv_scores(features, *meta.labels, folds, model,
                              plan.forest_trees,
                              rep_seed(plan.base_seed, split_rep,
                                       "model:" + model + ":" + tag))
                        .first;
                add_sample(cells, delta_key, acc - accuracy[model][di][r]);
              } catch (const std::exception& e) {
                add_failure(cells, delta_key, e.what());
              }
            }
          }
        }
      }
    }

    // Axis (c): spread of the per-dimension mean metric across the grid.
    if (scored && plan.dims.size() >= 2) {
      for (const std::string& model : plan.models) {
        const CellKey key{method.name, 0, "stability", model,
                          "accuracy_dim_spread"};
        for (std::size_t di = 0; di < plan.dims.size(); ++di) {
          const auto& acc = accuracy[model][di];
          std::vector<double> ok;
          for (const double a : acc)
            if (std::isfinite(a)) ok.push_back(a);
          if (ok.empty()) {
            add_failure(cells, key, "no successful replication at dim " +
                                        std::to_string(plan.dims[di]));
            continue;
          }
          add_sample(cells, key,
                     std::accumulate(ok.begin(), ok.end(), 0.0) /
                         static_cast<double>(ok.size()));
        }
      }
    }
  }
  return rows_from_cells(cells, plan.base_seed);
}

PcsReport run_all(const ExperimentPlan& plan, const Graph& g,
                  const NodeMetadata& meta) {
  PcsReport report;
  report.predictability = run_predictability(plan, g, meta);
  if (plan.computability_replications > 0)
    report.computability = run_computability(plan, g, meta);
  if (!plan.perturbations.empty() || plan.replications >= 2)
    report.stability = run_stability(plan, g, meta);
  return report;
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> pca_project(
    const Eigen::MatrixXd& embedding, int out_dim) {
  if (out_dim < 1 || out_dim > embedding.cols())
    throw std::invalid_argument("projection dimension out of range");
  const Eigen::MatrixXd centered =
      embedding.rowwise() - embedding.colwise().mean();
  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU);
  Eigen::MatrixXd scores =
      svd.matrixU().leftCols(out_dim) *
      svd.singularValues().head(out_dim).asDiagonal();
  apply_sign_convention(scores);
  Eigen::VectorXd explained =
      svd.singularValues().head(out_dim).cwiseAbs2() /
      static_cast<double>(embedding.rows());
  return {std::move(scores), std::move(explained)};
}

}  // namespace netembed
