#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace netembed {

using NodeId = std::uint32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  double weight = 1.0;
};

// Sparse graph in compressed-sparse-row form. Undirected graphs store every
// edge in both directions with equal weight; weights are strictly positive;
// self-loops are rejected at construction. Immutable once built, safe for
// concurrent reads.
class Graph {
 public:
  Graph() = default;

  // Merges duplicate edges by summing their weights; symmetrizes when
  // undirected. Throws std::invalid_argument on self-loops, node ids >= n,
  // and non-positive or non-finite weights.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          bool directed);

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  // Unique edges: unordered pairs for undirected graphs, arcs for directed.
  std::size_t edge_count() const noexcept {
    return directed_ ? adjacency_.size() : adjacency_.size() / 2;
  }
  std::size_t arc_count() const noexcept { return adjacency_.size(); }
  bool directed() const noexcept { return directed_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::span<const double> neighbor_weights(NodeId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  // Sum of incident edge weights (out-weights for directed graphs).
  double strength(NodeId v) const { return strength_[v]; }

  bool has_edge(NodeId u, NodeId v) const;    // binary search, O(log deg)
  double edge_weight(NodeId u, NodeId v) const;  // 0 when absent

  // Unique edge list: src < dst for undirected graphs, all arcs otherwise.
  std::vector<Edge> edges() const;
  bool is_weighted() const;  // any stored weight != 1

 private:
  std::vector<std::size_t> offsets_ = {0};
  std::vector<NodeId> adjacency_;
  std::vector<double> weights_;
  std::vector<double> strength_;
  bool directed_ = false;
};

struct NodeMetadata {
  std::optional<std::vector<int>> labels;       // contiguous ids from 0
  std::optional<Eigen::MatrixXd> covariates;    // n x m
};

struct SbmParams {
  std::vector<std::size_t> block_sizes;
  double within_prob = 0.0;
  double between_prob = 0.0;
};

// Original edge-list tokens <-> dense internal ids.
struct IdMap {
  std::vector<std::string> to_external;
  std::unordered_map<std::string, NodeId> to_internal;
};

// Text edge list: one "src dst [weight]" per line, '#' lines ignored.
// Node tokens are remapped to 0..n-1 in order of first appearance; duplicate
// edges merge by weight summation. Throws ParseError with the offending line
// number on malformed lines (bad token count, non-numeric or non-positive
// weight) and on self-loops.
std::pair<Graph, IdMap> load_edge_list(std::istream& in, bool directed);

// Writes internal ids in the same format; weights emitted only when the
// graph is weighted.
void save_edge_list(const Graph& g, std::ostream& out);

// Labels (and optional covariates) as CSV with a header row whose first
// column is the node id. A column named "label" becomes labels; remaining
// numeric columns become covariates. When `ids` is given the node column
// holds external tokens and is mapped through it; otherwise it must hold
// internal indices. Every node must be covered exactly once.
NodeMetadata load_metadata_csv(std::istream& in, std::size_t node_count,
                               const IdMap* ids = nullptr);
void save_labels_csv(const std::vector<int>& labels, std::ostream& out);

// Node token -> label, for pairing label files with saved embeddings
// without a graph at hand.
std::unordered_map<std::string, int> load_label_map_csv(std::istream& in);

// Undirected, unweighted stochastic block model draw; returns the graph and
// block memberships. Bit-reproducible for a fixed seed.
std::pair<Graph, std::vector<int>> generate_sbm(const SbmParams& params,
                                                std::uint64_t seed);

// Induced subgraph on the largest (weakly) connected component, nodes
// re-indexed in increasing original id order; metadata rows filtered to
// match. Ties between equal-size components break toward the one containing
// the smallest original node id.
std::pair<Graph, NodeMetadata> largest_connected_component(
    const Graph& g, const NodeMetadata& meta);

// Component id per node (weak connectivity for directed graphs).
std::vector<int> weak_components(const Graph& g);

// One-step walk distribution from `node`: P(j) = W_ij / sum_k W_ik, in
// neighbor-list order. Throws IsolatedNodeError on degree-0 nodes.
std::vector<double> transition_probs(const Graph& g, NodeId node);

enum class LaplacianKind { unnormalized, sym_normalized, random_walk };

// L = D - W, L_sym = I - D^{-1/2} W D^{-1/2}, or L_rw = I - D^{-1} W.
// Zero-degree nodes contribute zero rows (their D^{-1/2}, D^{-1} are taken
// as 0). Also returns the weighted degree vector. Undirected input only.
std::pair<Eigen::SparseMatrix<double>, Eigen::VectorXd> laplacian(
    const Graph& g, LaplacianKind kind);

enum class PerturbMode { remove_edges, flip_pairs };

// remove_edges deletes floor(fraction * |E|) uniformly sampled edges;
// flip_pairs toggles presence of floor(fraction * |E|) node pairs sampled
// without replacement from all C(n,2) pairs. Node set is unchanged.
Graph perturb(const Graph& g, PerturbMode mode, double fraction,
              std::uint64_t seed);

}  // namespace netembed
