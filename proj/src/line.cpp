#include "netembed/line.hpp"

#include <stdexcept>
#include <vector>

#include "netembed/alias.hpp"
#include "netembed/negative_sampling.hpp"
#include "netembed/util.hpp"

namespace netembed {

Embedding train_line(const Graph& g, const TrainConfig& config,
                     std::uint64_t seed) {
  config.validate();
  if (g.edge_count() == 0) throw std::invalid_argument("empty edge set");

  const std::size_t n = g.node_count();
  const std::size_t d = static_cast<std::size_t>(config.dim);
  const bool second_order = config.line_order == 2;

  // Arc list (both directions for undirected graphs) with weight-proportional
  // sampling; every arc draw takes center = src, positive = dst.
  std::vector<NodeId> arc_src, arc_dst;
  std::vector<double> arc_weight;
  arc_src.reserve(g.arc_count());
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    const auto ws = g.neighbor_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      arc_src.push_back(u);
      arc_dst.push_back(nbrs[i]);
      arc_weight.push_back(ws[i]);
    }
  }
  const AliasTable edge_sampler(arc_weight);
  const NoiseDistribution noise = degree_noise(g, config.noise_exponent);

  const Rng root(seed);
  std::vector<double> center(n * d);
  {
    Rng init = root.split("init");
    const double half = 0.5 / static_cast<double>(d);
    for (double& x : center) x = init.next_uniform(-half, half);
  }
  std::vector<double> context;
  if (second_order) context.assign(n * d, 0.0);
  double* ctx_rows = second_order ? context.data() : center.data();

  const std::uint64_t total_samples =
      static_cast<std::uint64_t>(config.epochs) * g.edge_count();

  parallel_chunks(
      static_cast<std::size_t>(total_samples), config.threads,
      [&](std::size_t lo, std::size_t hi) {
        Rng rng = root.split("sgd").split(lo);
        std::vector<double> acc(d);
        for (std::size_t s = lo; s < hi; ++s) {
          const double lr = config.lr_at(s, total_samples);
          const std::size_t arc = edge_sampler.sample(rng);
          double* crow =
              center.data() + static_cast<std::size_t>(arc_src[arc]) * d;
          acc.assign(d, 0.0);
          {
            double* pos =
                ctx_rows + static_cast<std::size_t>(arc_dst[arc]) * d;
            double dot = 0.0;
            for (std::size_t j = 0; j < d; ++j) dot += crow[j] * pos[j];
            const double gcoef = lr * (1.0 - sigmoid(dot));
            for (std::size_t j = 0; j < d; ++j) {
              acc[j] += gcoef * pos[j];
              pos[j] += gcoef * crow[j];
            }
          }
          for (int l = 0; l < config.negative_samples; ++l) {
            const NodeId nid = noise.sample(rng);
            double* neg = ctx_rows + static_cast<std::size_t>(nid) * d;
            double dot = 0.0;
            for (std::size_t j = 0; j < d; ++j) dot += crow[j] * neg[j];
            const double gcoef = -lr * sigmoid(dot);
            for (std::size_t j = 0; j < d; ++j) {
              acc[j] += gcoef * neg[j];
              neg[j] += gcoef * crow[j];
            }
          }
          for (std::size_t j = 0; j < d; ++j) crow[j] += acc[j];
        }
      });

  Embedding emb;
  emb.method = second_order ? "line2" : "line1";
  emb.seed = seed;
  emb.center.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      emb.center(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          center[i * d + j];
  if (second_order) {
    Eigen::MatrixXd ctx(static_cast<Eigen::Index>(n),
                        static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j)
        ctx(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            context[i * d + j];
    emb.context = std::move(ctx);
  }
  return emb;
}

double line_first_order_loss(const Graph& g, const Eigen::MatrixXd& z) {
  double loss = 0.0;
  for (const Edge& e : g.edges())
    loss -= e.weight * log_sigmoid(z.row(e.src).dot(z.row(e.dst)));
  return loss;
}

}  // namespace netembed
