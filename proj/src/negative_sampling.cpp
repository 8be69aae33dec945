#include "netembed/negative_sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace netembed {

namespace {

NoiseDistribution noise_from_counts(std::vector<double> counts,
                                    double exponent) {
  double total = 0.0;
  for (double& c : counts) {
    c = c > 0.0 ? std::pow(c, exponent) : 0.0;
    total += c;
  }
  if (total <= 0.0)
    throw std::invalid_argument("noise distribution has no mass");
  NoiseDistribution dist;
  dist.prob.resize(counts.size());
  for (std::size_t v = 0; v < counts.size(); ++v)
    dist.prob[v] = counts[v] / total;
  dist.table = std::make_unique<AliasTable>(counts);
  return dist;
}

}  // namespace

NoiseDistribution unigram_noise(const WalkCorpus& corpus, double exponent) {
  if (corpus.walks.empty()) throw std::invalid_argument("empty corpus");
  std::vector<double> counts(corpus.node_count, 0.0);
  for (const auto& walk : corpus.walks)
    for (const NodeId v : walk) {
      if (v >= corpus.node_count)
        throw std::out_of_range("corpus node id out of range");
      counts[v] += 1.0;
    }
  return noise_from_counts(std::move(counts), exponent);
}

NoiseDistribution degree_noise(const Graph& g, double exponent) {
  std::vector<double> counts(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) counts[v] = g.strength(v);
  return noise_from_counts(std::move(counts), exponent);
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double log_sigmoid(double x) {
  // log(1/(1+e^-x)) without overflow on either tail.
  return x >= 0.0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x));
}

double ns_loss_and_grad(Eigen::Ref<const Eigen::VectorXd> center,
                        Eigen::Ref<const Eigen::VectorXd> positive,
                        const Eigen::MatrixXd& negatives,
                        NsGradients* grads) {
  const Eigen::Index d = center.size();
  if (positive.size() != d || (negatives.size() > 0 && negatives.cols() != d))
    throw std::invalid_argument("ns_loss_and_grad: dimension mismatch");

  const double pos_dot = positive.dot(center);
  double objective = log_sigmoid(pos_dot);
  if (grads) {
    const double pos_coef = 1.0 - sigmoid(pos_dot);
    grads->center = pos_coef * positive;
    grads->positive = pos_coef * center;
    grads->negatives.resize(negatives.rows(), d);
  }
  for (Eigen::Index l = 0; l < negatives.rows(); ++l) {
    const double neg_dot = negatives.row(l).dot(center);
    objective += log_sigmoid(-neg_dot);
    if (grads) {
      const double neg_coef = -sigmoid(neg_dot);
      grads->center += neg_coef * negatives.row(l).transpose();
      grads->negatives.row(l) = neg_coef * center.transpose();
    }
  }
  return objective;
}

}  // namespace netembed
