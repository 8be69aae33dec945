#pragma once

#include <memory>
#include <vector>

#include <Eigen/Core>

#include "netembed/alias.hpp"
#include "netembed/walks.hpp"

namespace netembed {

// Noise distribution over node ids for negative sampling.
struct NoiseDistribution {
  std::vector<double> prob;  // normalized, 0 for nodes absent from the source
  std::unique_ptr<AliasTable> table;

  NodeId sample(Rng& rng) const {
    return static_cast<NodeId>(table->sample(rng));
  }
};

// P(v) proportional to corpus count(v)^exponent (0.75 by default; the 3/4
// power is a language-modeling default, kept configurable here).
NoiseDistribution unigram_noise(const WalkCorpus& corpus,
                                double exponent = 0.75);

// Same construction with weighted node degrees as frequencies (corpus-free
// trainers such as LINE).
NoiseDistribution degree_noise(const Graph& g, double exponent = 0.75);

// Numerically safe sigmoid and log-sigmoid.
double sigmoid(double x);
double log_sigmoid(double x);

struct NsGradients {
  Eigen::VectorXd center;
  Eigen::VectorXd positive;
  Eigen::MatrixXd negatives;  // one row per negative sample
};

// Negative-sampling objective for one (center, positive, k negatives) tuple:
//   log sigmoid(pos . center) + sum_l log sigmoid(-neg_l . center),
// to be maximized. Fills exact analytic gradients when `grads` is non-null.
double ns_loss_and_grad(Eigen::Ref<const Eigen::VectorXd> center,
                        Eigen::Ref<const Eigen::VectorXd> positive,
                        const Eigen::MatrixXd& negatives,
                        NsGradients* grads = nullptr);

}  // namespace netembed
