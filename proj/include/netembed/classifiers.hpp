#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "netembed/rng.hpp"

namespace netembed {

// Multinomial logistic regression, fit by full-batch gradient descent with
// backtracking line search on
//   sum_i -log softmax(W x_i + b)_{y_i} + l2/2 * |W|_F^2     (bias unpenalized)
struct LogisticModel {
  Eigen::MatrixXd weights;  // C x p
  Eigen::VectorXd bias;     // C
  bool converged = false;   // gradient inf-norm < tol before max_iter
  std::vector<double> objective_trace;  // non-increasing across accepted steps
};

LogisticModel fit_logistic(const Eigen::MatrixXd& x,
                           const std::vector<int>& y, double l2 = 1e-4,
                           int max_iter = 1000, double tol = 1e-6);

// Objective and gradient at (weights, bias); used by training and tests.
double logistic_objective(const Eigen::MatrixXd& x, const std::vector<int>& y,
                          const Eigen::MatrixXd& weights,
                          const Eigen::VectorXd& bias, double l2,
                          Eigen::MatrixXd* grad_w = nullptr,
                          Eigen::VectorXd* grad_b = nullptr);

Eigen::MatrixXd logistic_probabilities(const LogisticModel& model,
                                       const Eigen::MatrixXd& x);

// CART forest: Gini splits over sqrt(p) random feature subsets, bootstrap
// resampling per tree, majority vote with ties toward the smaller class id.
struct ForestConfig {
  int trees = 100;
  int max_depth = -1;  // unlimited
  int min_leaf = 1;
  bool bootstrap = true;
  int features_per_split = 0;  // 0 => floor(sqrt(p)), at least 1
};

struct TreeNode {
  int feature = -1;       // -1 marks a leaf
  double threshold = 0.0; // goes left when x[feature] <= threshold
  int left = -1;
  int right = -1;
  int label = -1;         // leaf prediction
};

struct ForestModel {
  std::vector<std::vector<TreeNode>> trees;
  int class_count = 0;
  Eigen::Index feature_count = 0;
};

ForestModel fit_random_forest(const Eigen::MatrixXd& x,
                              const std::vector<int>& y,
                              const ForestConfig& config, std::uint64_t seed);

// Single CART tree on the given rows; a pure node becomes a leaf predicting
// its label. Building is depth-first and deterministic given the stream.
std::vector<TreeNode> fit_decision_tree(const Eigen::MatrixXd& x,
                                        const std::vector<int>& y,
                                        const std::vector<int>& rows,
                                        const ForestConfig& config,
                                        int class_count, Rng& rng);

Eigen::MatrixXd forest_probabilities(const ForestModel& model,
                                     const Eigen::MatrixXd& x);

// Argmax labels from a probability matrix, ties toward the smaller class id.
std::vector<int> predict_labels(const Eigen::MatrixXd& probabilities);

}  // namespace netembed
