#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netembed/graph.hpp"

namespace netembed {

// k disjoint folds covering 0..n-1 with per-class counts differing by at
// most 1 across folds. Throws std::invalid_argument naming any class with
// fewer than k members.
std::vector<std::vector<int>> stratified_kfold(const std::vector<int>& y,
                                               int k, std::uint64_t seed);

struct LinkSplit {
  Graph train;
  std::vector<std::pair<NodeId, NodeId>> test_positives;
  std::vector<std::pair<NodeId, NodeId>> test_negatives;
  bool train_connected = true;  // recorded, not enforced
};

// Removes floor(test_fraction * |E|) uniformly sampled edges as test
// positives and samples neg_ratio times as many uniform non-edges (disjoint
// from every edge of g) as test negatives. Undirected graphs only.
LinkSplit link_split(const Graph& g, double test_fraction, int neg_ratio,
                     std::uint64_t seed);

}  // namespace netembed
