#pragma once

#include <vector>

#include "netembed/embedding.hpp"
#include "netembed/graph.hpp"

namespace netembed {

// Bernoulli log-likelihood of an undirected graph under the latent distance
// model: sum_{i<j} [ A_ij eta_ij - log(1 + e^{eta_ij}) ] with
// eta_ij = alpha - |z_i - z_j|. Overflow-safe on both tails.
double lsm_log_likelihood(const Graph& g, const Eigen::MatrixXd& positions,
                          double alpha);

// Exact gradient of the log-likelihood; grad_alpha via out-parameter.
Eigen::MatrixXd lsm_gradient(const Graph& g, const Eigen::MatrixXd& positions,
                             double alpha, double* grad_alpha);

struct LsmFit {
  Eigen::MatrixXd positions;  // centered at the origin
  double alpha = 0.0;
  std::vector<double> loglik_trace;  // non-decreasing across accepted steps
};

// Full-batch gradient ascent MLE with backtracking line search. Positions
// start from the d leading adjacency eigenvectors scaled to unit RMS row
// norm; alpha starts at logit(edge density). Deterministic.
LsmFit fit_latent_space(const Graph& g, int d, const TrainConfig& config,
                        std::uint64_t seed);

}  // namespace netembed
