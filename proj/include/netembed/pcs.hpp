#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netembed/graph.hpp"
#include "netembed/methods.hpp"

namespace netembed {

struct QuantileBand {
  double low = 0.0;
  double mean = 0.0;
  double high = 0.0;
};

// Empirical quantiles by linear interpolation between order statistics
// (inclusive convention: position (n-1)*q), plus the arithmetic mean.
QuantileBand quantile_band(std::vector<double> samples, double lo = 0.025,
                           double hi = 0.975);

// The full experiment grid: methods x dimensions x tasks x downstream
// models, replicated and aggregated into quantile bands. Replication r
// reseeds everything downstream of the graph (walks, SGD init, CV splits)
// from (base_seed, r) while the graph stays fixed.
struct ExperimentPlan {
  std::vector<MethodConfig> methods;
  std::vector<int> dims = {2, 8, 16};
  int replications = 20;
  int cv_folds = 5;
  std::vector<std::string> tasks = {"node_classification", "clustering"};
  std::vector<std::string> models = {"logistic", "random_forest"};
  std::vector<std::pair<PerturbMode, double>> perturbations;
  std::uint64_t base_seed = 0;
  int threads = 1;

  double link_test_fraction = 0.1;
  int link_neg_ratio = 1;
  std::string link_score = "dot";
  int cluster_k = 0;  // 0: use the number of distinct labels
  bool use_covariates = true;
  bool reseed_splits = true;  // false freezes CV/kmeans seeds across reps
  bool largest_component = true;  // restrict the input graph to its LCC
  int forest_trees = 100;
  int kmeans_restarts = 10;
  int computability_replications = 5;

  void validate(bool has_labels) const;  // throws std::invalid_argument
};

// One aggregated report entry. `samples` counts successful replications;
// `status` is "ok" or the first failure message.
struct ReportRow {
  std::string method;
  int dim = 0;
  std::string task;
  std::string model;
  std::string metric;
  QuantileBand band;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";
};

struct TimingRow {
  std::string method;
  int dim = 0;
  std::string stage;  // walks / train / evaluate
  QuantileBand band;
  int samples = 0;
  int threads = 1;
};

struct PcsReport {
  std::vector<ReportRow> predictability;
  std::vector<ReportRow> stability;
  std::vector<TimingRow> computability;
};

// Per task: node_classification -> CV accuracy and macro-F1 per model;
// link_prediction -> AUC of similarity scores on held-out edges;
// clustering -> k-means ARI against the labels.
std::vector<ReportRow> run_predictability(const ExperimentPlan& plan,
                                          const Graph& g,
                                          const NodeMetadata& meta);

// Wall-clock per stage over computability_replications runs, after one
// discarded warm-up run.
std::vector<TimingRow> run_computability(const ExperimentPlan& plan,
                                         const Graph& g,
                                         const NodeMetadata& meta);

// Three axes: (a) seed — Procrustes drift and metric spread across reseeded
// runs; (b) data — drift and metric deltas against each perturbed graph;
// (c) hyperparameter — metric spread across the dimension grid (dim 0 rows).
std::vector<ReportRow> run_stability(const ExperimentPlan& plan,
                                     const Graph& g, const NodeMetadata& meta);

PcsReport run_all(const ExperimentPlan& plan, const Graph& g,
                  const NodeMetadata& meta);

// Column-centered SVD projection: scores for the leading components plus
// per-component explained variance, signs per the spectral convention.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> pca_project(
    const Eigen::MatrixXd& embedding, int out_dim = 2);

std::string perturb_mode_name(PerturbMode mode);

}  // namespace netembed
