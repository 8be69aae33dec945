#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "netembed/graph.hpp"
#include "netembed/rng.hpp"

namespace netembed {

// Return / in-out bias of the second-order (node2vec) walk.
struct Node2vecParams {
  double return_p = 1.0;  // p
  double inout_q = 1.0;   // q
};

struct WalkConfig {
  int walks_per_node = 10;  // gamma
  int walk_length = 40;     // t
  std::optional<Node2vecParams> node2vec;  // absent => first-order walk
  int threads = 1;

  void validate() const;  // throws std::invalid_argument
};

struct WalkCorpus {
  std::vector<std::vector<NodeId>> walks;
  std::size_t node_count = 0;
  WalkConfig config;
  std::uint64_t seed = 0;
};

// One weighted random walk from `start`, truncated at config.walk_length or
// earlier at a dead end. First-order steps follow W_vx / sum_k W_vk;
// node2vec steps from v with previous node u reweight each candidate x by
// 1/p when x == u, 1 when x is adjacent to u, and 1/q otherwise. Biases are
// computed on the fly per step (O(deg) per step, no per-edge alias tables).
std::vector<NodeId> sample_walk(const Graph& g, NodeId start,
                                const WalkConfig& config, Rng& rng);

// gamma walks per node with the start order reshuffled every pass. Walk
// randomness is keyed by (seed, pass, node), so the corpus is identical for
// any thread count; length-1 walks (isolated starts) are dropped.
WalkCorpus generate_corpus(const Graph& g, const WalkConfig& config,
                           std::uint64_t seed);

// One walk per line, space-separated internal node ids.
void write_corpus(const WalkCorpus& corpus, std::ostream& out);

}  // namespace netembed
