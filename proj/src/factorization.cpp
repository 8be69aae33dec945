#include "netembed/factorization.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "netembed/rng.hpp"

namespace netembed {

double factorization_loss(const Graph& g, const Eigen::MatrixXd& z,
                          double ridge) {
  double loss = 0.0;
  for (const Edge& e : g.edges()) {
    const double r = e.weight - z.row(e.src).dot(z.row(e.dst));
    loss += 0.5 * r * r;
  }
  return loss + 0.5 * ridge * z.squaredNorm();
}

Embedding graph_factorization(const Graph& g, const TrainConfig& config,
                              std::uint64_t seed,
                              std::vector<double>* loss_trace) {
  config.validate();
  if (g.edge_count() == 0) throw std::invalid_argument("empty edge set");

  const std::size_t n = g.node_count();
  const Eigen::Index d = config.dim;
  const std::vector<Edge> edges = g.edges();

  const Rng root(seed);
  Eigen::MatrixXd z(static_cast<Eigen::Index>(n), d);
  {
    Rng init = root.split("init");
    const double half = 0.5 / static_cast<double>(d);
    for (Eigen::Index i = 0; i < z.rows(); ++i)
      for (Eigen::Index j = 0; j < d; ++j) z(i, j) = init.next_uniform(-half, half);
  }

  // Spread the ridge over a node's edge visits so one epoch applies the full
  // lambda per node in total.
  std::vector<double> per_visit_ridge(n, 0.0);
  for (NodeId v = 0; v < n; ++v)
    if (g.degree(v) > 0)
      per_visit_ridge[v] = config.ridge / static_cast<double>(g.degree(v));

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  Rng shuffle_rng = root.split("shuffle");
  const std::uint64_t total =
      static_cast<std::uint64_t>(config.epochs) * edges.size();
  std::uint64_t done = 0;
  Eigen::VectorXd zi(d), zj(d);

  if (loss_trace) loss_trace->push_back(factorization_loss(g, z, config.ridge));
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    shuffle_rng.shuffle(order);
    for (const std::size_t idx : order) {
      const Edge& e = edges[idx];
      const double lr = config.lr_at(done++, total);
      zi = z.row(e.src);
      zj = z.row(e.dst);
      const double r = e.weight - zi.dot(zj);
      // Gradient step on the residual, proximal step on the ridge.
      z.row(e.src) = (zi + lr * r * zj) / (1.0 + lr * per_visit_ridge[e.src]);
      z.row(e.dst) = (zj + lr * r * zi) / (1.0 + lr * per_visit_ridge[e.dst]);
    }
    if (loss_trace)
      loss_trace->push_back(factorization_loss(g, z, config.ridge));
  }

  Embedding emb;
  emb.method = "gf";
  emb.seed = seed;
  emb.center = std::move(z);
  return emb;
}

}  // namespace netembed
