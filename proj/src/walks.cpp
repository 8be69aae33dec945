#include "netembed/walks.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

#include "netembed/util.hpp"

namespace netembed {

void WalkConfig::validate() const {
  if (walks_per_node < 1)
    throw std::invalid_argument("walks_per_node must be >= 1");
  if (walk_length < 2) throw std::invalid_argument("walk_length must be >= 2");
  if (node2vec && (!(node2vec->return_p > 0.0) || !(node2vec->inout_q > 0.0)))
    throw std::invalid_argument("node2vec p and q must be > 0");
}

namespace {

// Weighted pick by inverse CDF over the neighbor list. `bias` multiplies the
// stored edge weight; bias == nullptr means first-order (all ones).
template <class BiasFn>
NodeId pick_neighbor(const Graph& g, NodeId v, Rng& rng, BiasFn&& bias) {
  const auto nbrs = g.neighbors(v);
  const auto ws = g.neighbor_weights(v);
  double total = 0.0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) total += ws[i] * bias(nbrs[i]);
  const double u = rng.next_real() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < nbrs.size(); ++i) {
    acc += ws[i] * bias(nbrs[i]);
    if (u < acc) return nbrs[i];
  }
  return nbrs.back();
}

}  // namespace

std::vector<NodeId> sample_walk(const Graph& g, NodeId start,
                                const WalkConfig& config, Rng& rng) {
  config.validate();
  if (start >= g.node_count())
    throw std::invalid_argument("walk start node out of range");

  std::vector<NodeId> walk;
  walk.reserve(static_cast<std::size_t>(config.walk_length));
  walk.push_back(start);
  while (walk.size() < static_cast<std::size_t>(config.walk_length)) {
    const NodeId current = walk.back();
    if (g.degree(current) == 0) break;  // dead end: truncate
    NodeId next;
    if (config.node2vec && walk.size() >= 2) {
      const NodeId prev = walk[walk.size() - 2];
      const double inv_p = 1.0 / config.node2vec->return_p;
      const double inv_q = 1.0 / config.node2vec->inout_q;
      next = pick_neighbor(g, current, rng, [&](NodeId x) {
        if (x == prev) return inv_p;
        if (g.has_edge(prev, x)) return 1.0;
        return inv_q;
      });
    } else {
      next = pick_neighbor(g, current, rng, [](NodeId) { return 1.0; });
    }
    walk.push_back(next);
  }
  return walk;
}

WalkCorpus generate_corpus(const Graph& g, const WalkConfig& config,
                           std::uint64_t seed) {
  config.validate();
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");

  const std::size_t n = g.node_count();
  const Rng root(seed);
  WalkCorpus corpus;
  corpus.node_count = n;
  corpus.config = config;
  corpus.seed = seed;

  const std::size_t per_pass = n;
  std::vector<std::vector<NodeId>> slots(
      static_cast<std::size_t>(config.walks_per_node) * per_pass);

  for (int pass = 0; pass < config.walks_per_node; ++pass) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng shuffle_rng =
        root.split("order").split(static_cast<std::uint64_t>(pass));
    shuffle_rng.shuffle(order);

    const Rng pass_rng =
        root.split("walk").split(static_cast<std::uint64_t>(pass));
    const std::size_t base = static_cast<std::size_t>(pass) * per_pass;
    parallel_chunks(n, config.threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t idx = lo; idx < hi; ++idx) {
        const NodeId start = order[idx];
        Rng walk_rng = pass_rng.split(start);
        slots[base + idx] = sample_walk(g, start, config, walk_rng);
      }
    });
  }

  corpus.walks.reserve(slots.size());
  for (auto& w : slots)
    if (w.size() >= 2) corpus.walks.push_back(std::move(w));
  return corpus;
}

void write_corpus(const WalkCorpus& corpus, std::ostream& out) {
  for (const auto& walk : corpus.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (i) out << ' ';
      out << walk[i];
    }
    out << '\n';
  }
}

}  // namespace netembed
