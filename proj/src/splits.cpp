#include "netembed/splits.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "netembed/rng.hpp"

namespace netembed {

std::vector<std::vector<int>> stratified_kfold(const std::vector<int>& y,
                                               int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("fold count must be >= 2");
  if (y.empty()) throw std::invalid_argument("empty label vector");
  int classes = 0;
  for (const int v : y) {
    if (v < 0) throw std::invalid_argument("labels must be >= 0");
    classes = std::max(classes, v + 1);
  }

  std::vector<std::vector<int>> by_class(classes);
  for (std::size_t i = 0; i < y.size(); ++i)
    by_class[y[i]].push_back(static_cast<int>(i));
  for (int c = 0; c < classes; ++c) {
    if (!by_class[c].empty() && by_class[c].size() < static_cast<std::size_t>(k))
      throw std::invalid_argument("class " + std::to_string(c) + " has only " +
                                  std::to_string(by_class[c].size()) +
                                  " members for " + std::to_string(k) +
                                  " folds");
  }

  const Rng root(seed);
  std::vector<std::vector<int>> folds(k);
  for (int c = 0; c < classes; ++c) {
    Rng rng = root.split("class").split(static_cast<std::uint64_t>(c));
    rng.shuffle(by_class[c]);
    for (std::size_t i = 0; i < by_class[c].size(); ++i)
      folds[i % k].push_back(by_class[c][i]);
  }
  for (auto& fold : folds) std::sort(fold.begin(), fold.end());
  return folds;
}

LinkSplit link_split(const Graph& g, double test_fraction, int neg_ratio,
                     std::uint64_t seed) {
  if (g.directed())
    throw std::invalid_argument("link_split requires an undirected graph");
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw std::invalid_argument("test_fraction must lie in (0,1)");
  if (neg_ratio < 1) throw std::invalid_argument("neg_ratio must be >= 1");

  const std::uint64_t n = g.node_count();
  std::vector<Edge> edges = g.edges();
  const std::size_t positives = static_cast<std::size_t>(
      test_fraction * static_cast<double>(edges.size()));
  const std::size_t negatives = positives * static_cast<std::size_t>(neg_ratio);
  const std::uint64_t total_pairs = n * (n - 1) / 2;
  if (total_pairs - edges.size() < negatives)
    throw std::invalid_argument("not enough non-edges for neg_ratio");

  Rng rng = Rng(seed).split("link");
  LinkSplit split;
  if (positives > 0) {
    for (std::size_t i = 0; i < positives; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(rng.next_below(edges.size() - i));
      std::swap(edges[i], edges[j]);
    }
    split.test_positives.reserve(positives);
    for (std::size_t i = 0; i < positives; ++i)
      split.test_positives.emplace_back(edges[i].src, edges[i].dst);
    edges.erase(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(positives));
  }
  split.train = Graph::from_edges(g.node_count(), edges, /*directed=*/false);

  // Uniform non-edges of the original graph, sampled without replacement.
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2 * negatives);
  split.test_negatives.reserve(negatives);
  while (split.test_negatives.size() < negatives) {
    const std::uint64_t idx = rng.next_below(total_pairs);
    if (!seen.insert(idx).second) continue;
    // Unrank: row i, then column offset. Same ordering as graph::perturb.
    std::uint64_t lo = 0, hi = n - 1;
    auto offset = [n](std::uint64_t i) { return i * n - i * (i + 1) / 2; };
    while (lo < hi) {
      const std::uint64_t mid = (lo + hi + 1) / 2;
      if (offset(mid) <= idx)
        lo = mid;
      else
        hi = mid - 1;
    }
    const NodeId a = static_cast<NodeId>(lo);
    const NodeId b = static_cast<NodeId>(lo + 1 + (idx - offset(lo)));
    if (g.has_edge(a, b)) continue;
    split.test_negatives.emplace_back(a, b);
  }

  const std::vector<int> comp = weak_components(split.train);
  split.train_connected =
      *std::max_element(comp.begin(), comp.end()) == 0;
  return split;
}

}  // namespace netembed
