#include "netembed/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "netembed/errors.hpp"
#include "netembed/rng.hpp"
#include "netembed/util.hpp"

namespace netembed {

namespace {

// Arc-level merge: sort by (src, dst) and sum weights of duplicates.
std::vector<Edge> merge_arcs(std::vector<Edge> arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  std::vector<Edge> merged;
  merged.reserve(arcs.size());
  for (const Edge& e : arcs) {
    if (!merged.empty() && merged.back().src == e.src &&
        merged.back().dst == e.dst) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        bool directed) {
  std::vector<Edge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const Edge& e : edges) {
    if (e.src >= node_count || e.dst >= node_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.src == e.dst) throw std::invalid_argument("self-loop rejected");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw std::invalid_argument("edge weight must be positive and finite");
    arcs.push_back(e);
    if (!directed) arcs.push_back({e.dst, e.src, e.weight});
  }
  arcs = merge_arcs(std::move(arcs));

  Graph g;
  g.directed_ = directed;
  g.offsets_.assign(node_count + 1, 0);
  for (const Edge& a : arcs) ++g.offsets_[a.src + 1];
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(arcs.size());
  g.weights_.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {  // arcs already sorted
    g.adjacency_[i] = arcs[i].dst;
    g.weights_[i] = arcs[i].weight;
  }
  g.strength_.assign(node_count, 0.0);
  for (const Edge& a : arcs) g.strength_[a.src] += a.weight;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

double Graph::edge_weight(NodeId u, NodeId v) const {
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return 0.0;
  return weights_[offsets_[u] + static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    const auto nbrs = neighbors(u);
    const auto ws = neighbor_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!directed_ && nbrs[i] < u) continue;
      out.push_back({u, nbrs[i], ws[i]});
    }
  }
  return out;
}

bool Graph::is_weighted() const {
  return std::any_of(weights_.begin(), weights_.end(),
                     [](double w) { return w != 1.0; });
}

std::pair<Graph, IdMap> load_edge_list(std::istream& in, bool directed) {
  IdMap ids;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;

  auto intern = [&ids](const std::string& token) {
    const auto it = ids.to_internal.find(token);
    if (it != ids.to_internal.end()) return it->second;
    const NodeId id = static_cast<NodeId>(ids.to_external.size());
    ids.to_external.push_back(token);
    ids.to_internal.emplace(token, id);
    return id;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() < 2 || tokens.size() > 3)
      throw ParseError("expected 'src dst [weight]', got " +
                           std::to_string(tokens.size()) + " tokens",
                       lineno);
    double w = 1.0;
    if (tokens.size() == 3) {
      char* end = nullptr;
      w = std::strtod(tokens[2].c_str(), &end);
      if (end == tokens[2].c_str() || *end != '\0' || !std::isfinite(w))
        throw ParseError("non-numeric weight '" + tokens[2] + "'", lineno);
      if (w <= 0.0) throw ParseError("weight must be > 0", lineno);
    }
    if (tokens[0] == tokens[1]) throw ParseError("self-loop rejected", lineno);
    edges.push_back({intern(tokens[0]), intern(tokens[1]), w});
  }
  Graph g = Graph::from_edges(ids.to_external.size(), edges, directed);
  return {std::move(g), std::move(ids)};
}

void save_edge_list(const Graph& g, std::ostream& out) {
  const bool weighted = g.is_weighted();
  for (const Edge& e : g.edges()) {
    out << e.src << ' ' << e.dst;
    if (weighted) out << ' ' << format_double(e.weight);
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream fs(s);
  while (std::getline(fs, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

NodeMetadata load_metadata_csv(std::istream& in, std::size_t node_count,
                               const IdMap* ids) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("missing CSV header row", 1);

  const std::vector<std::string> header = split_csv(line);
  if (header.empty() || header[0] != "node")
    throw ParseError("first CSV column must be 'node'", 1);
  int label_col = -1;
  std::vector<std::size_t> covariate_cols;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c] == "label")
      label_col = static_cast<int>(c);
    else
      covariate_cols.push_back(c);
  }

  NodeMetadata meta;
  if (label_col >= 0) meta.labels = std::vector<int>(node_count, -1);
  if (!covariate_cols.empty())
    meta.covariates = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(node_count),
        static_cast<Eigen::Index>(covariate_cols.size()));

  std::size_t lineno = 1;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != header.size())
      throw ParseError("expected " + std::to_string(header.size()) +
                           " fields, got " + std::to_string(fields.size()),
                       lineno);
    long node = -1;
    char* end = nullptr;
    if (ids) {
      const auto it = ids->to_internal.find(fields[0]);
      if (it == ids->to_internal.end())
        throw ParseError("node '" + fields[0] + "' not in the graph", lineno);
      node = it->second;
    } else {
      node = std::strtol(fields[0].c_str(), &end, 10);
      if (end == fields[0].c_str() || *end != '\0' || node < 0 ||
          static_cast<std::size_t>(node) >= node_count)
        throw ParseError("bad node id '" + fields[0] + "'", lineno);
    }
    if (label_col >= 0) {
      const long lab = std::strtol(fields[label_col].c_str(), &end, 10);
      if (end == fields[label_col].c_str() || *end != '\0' || lab < 0)
        throw ParseError("bad label '" + fields[label_col] + "'", lineno);
      (*meta.labels)[static_cast<std::size_t>(node)] = static_cast<int>(lab);
    }
    for (std::size_t c = 0; c < covariate_cols.size(); ++c) {
      const std::string& f = fields[covariate_cols[c]];
      const double x = std::strtod(f.c_str(), &end);
      if (end == f.c_str() || *end != '\0')
        throw ParseError("bad covariate '" + f + "'", lineno);
      (*meta.covariates)(node, static_cast<Eigen::Index>(c)) = x;
    }
    ++rows;
  }
  if (rows != node_count)
    throw ParseError("metadata rows (" + std::to_string(rows) +
                         ") do not cover all " + std::to_string(node_count) +
                         " nodes",
                     lineno);
  if (meta.labels) {
    for (std::size_t v = 0; v < node_count; ++v)
      if ((*meta.labels)[v] < 0)
        throw ParseError("node " + std::to_string(v) + " missing a label",
                         lineno);
  }
  return meta;
}

void save_labels_csv(const std::vector<int>& labels, std::ostream& out) {
  out << "node,label\n";
  for (std::size_t v = 0; v < labels.size(); ++v)
    out << v << ',' << labels[v] << '\n';
}

std::unordered_map<std::string, int> load_label_map_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing CSV header row", 1);
  const std::vector<std::string> header = split_csv(line);
  if (header.size() < 2 || header[0] != "node")
    throw ParseError("expected header 'node,label,...'", 1);
  int label_col = -1;
  for (std::size_t c = 1; c < header.size(); ++c)
    if (header[c] == "label") label_col = static_cast<int>(c);
  if (label_col < 0) throw ParseError("no 'label' column", 1);

  std::unordered_map<std::string, int> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != header.size())
      throw ParseError("wrong field count", lineno);
    char* end = nullptr;
    const long lab = std::strtol(fields[label_col].c_str(), &end, 10);
    if (end == fields[label_col].c_str() || *end != '\0')
      throw ParseError("bad label '" + fields[label_col] + "'", lineno);
    out[fields[0]] = static_cast<int>(lab);
  }
  return out;
}

std::pair<Graph, std::vector<int>> generate_sbm(const SbmParams& params,
                                                std::uint64_t seed) {
  if (params.block_sizes.empty())
    throw std::invalid_argument("block_sizes must be nonempty");
  for (const std::size_t b : params.block_sizes)
    if (b == 0) throw std::invalid_argument("block sizes must be positive");
  for (const double p : {params.within_prob, params.between_prob})
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("block probabilities must lie in [0,1]");

  std::vector<int> blocks;
  for (std::size_t b = 0; b < params.block_sizes.size(); ++b)
    blocks.insert(blocks.end(), params.block_sizes[b], static_cast<int>(b));
  const std::size_t n = blocks.size();

  Rng rng = Rng(seed).split("sbm");
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double p =
          blocks[i] == blocks[j] ? params.within_prob : params.between_prob;
      if (rng.next_real() < p) edges.push_back({i, j, 1.0});
    }
  }
  return {Graph::from_edges(n, edges, /*directed=*/false), std::move(blocks)};
}

std::vector<int> weak_components(const Graph& g) {
  const std::size_t n = g.node_count();
  // Directed graphs need reverse arcs for weak connectivity.
  std::vector<std::vector<NodeId>> reverse;
  if (g.directed()) {
    reverse.resize(n);
    for (NodeId u = 0; u < n; ++u)
      for (const NodeId v : g.neighbors(u)) reverse[v].push_back(u);
  }
  std::vector<int> comp(n, -1);
  int next = 0;
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      auto visit = [&](NodeId v) {
        if (comp[v] < 0) {
          comp[v] = next;
          queue.push_back(v);
        }
      };
      for (const NodeId v : g.neighbors(u)) visit(v);
      if (g.directed())
        for (const NodeId v : reverse[u]) visit(v);
    }
    ++next;
  }
  return comp;
}

std::pair<Graph, NodeMetadata> largest_connected_component(
    const Graph& g, const NodeMetadata& meta) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");

  const std::vector<int> comp = weak_components(g);
  const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::size_t> size(ncomp, 0);
  for (const int c : comp) ++size[c];
  // Components are numbered by their smallest node id (BFS from increasing
  // seeds), so the first maximal component wins the stated tie-break.
  int best = 0;
  for (int c = 1; c < ncomp; ++c)
    if (size[c] > size[best]) best = c;

  std::vector<NodeId> keep;
  std::vector<NodeId> remap(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (comp[v] == best) {
      remap[v] = static_cast<NodeId>(keep.size());
      keep.push_back(v);
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (comp[e.src] == best)
      edges.push_back({remap[e.src], remap[e.dst], e.weight});
  Graph sub = Graph::from_edges(keep.size(), edges, g.directed());

  NodeMetadata sub_meta;
  if (meta.labels) {
    sub_meta.labels = std::vector<int>();
    sub_meta.labels->reserve(keep.size());
    for (const NodeId v : keep) sub_meta.labels->push_back((*meta.labels)[v]);
  }
  if (meta.covariates) {
    Eigen::MatrixXd cov(static_cast<Eigen::Index>(keep.size()),
                        meta.covariates->cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
      cov.row(static_cast<Eigen::Index>(i)) = meta.covariates->row(keep[i]);
    sub_meta.covariates = std::move(cov);
  }
  return {std::move(sub), std::move(sub_meta)};
}

std::vector<double> transition_probs(const Graph& g, NodeId node) {
  if (g.degree(node) == 0) throw IsolatedNodeError(node);
  const auto ws = g.neighbor_weights(node);
  const double total = g.strength(node);
  std::vector<double> probs(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) probs[i] = ws[i] / total;
  return probs;
}

std::pair<Eigen::SparseMatrix<double>, Eigen::VectorXd> laplacian(
    const Graph& g, LaplacianKind kind) {
  if (g.directed())
    throw std::invalid_argument("laplacian requires an undirected graph");
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::VectorXd deg(n);
  for (Eigen::Index v = 0; v < n; ++v)
    deg[v] = g.strength(static_cast<NodeId>(v));

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(g.arc_count() + g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) == 0) continue;  // zero row
    const auto nbrs = g.neighbors(u);
    const auto ws = g.neighbor_weights(u);
    switch (kind) {
      case LaplacianKind::unnormalized:
        trip.emplace_back(u, u, deg[u]);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
          trip.emplace_back(u, nbrs[i], -ws[i]);
        break;
      case LaplacianKind::sym_normalized:
        trip.emplace_back(u, u, 1.0);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
          trip.emplace_back(u, nbrs[i],
                            -ws[i] / std::sqrt(deg[u] * deg[nbrs[i]]));
        break;
      case LaplacianKind::random_walk:
        trip.emplace_back(u, u, 1.0);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
          trip.emplace_back(u, nbrs[i], -ws[i] / deg[u]);
        break;
    }
  }
  Eigen::SparseMatrix<double> L(n, n);
  L.setFromTriplets(trip.begin(), trip.end());
  return {std::move(L), std::move(deg)};
}

namespace {

// Pair index <-> (i, j) with i < j, indices ordered row by row.
std::pair<NodeId, NodeId> unrank_pair(std::uint64_t idx, std::uint64_t n) {
  // Smallest i with offset(i+1) > idx, offset(i) = i*n - i*(i+1)/2.
  std::uint64_t lo = 0, hi = n - 1;
  auto offset = [n](std::uint64_t i) { return i * n - i * (i + 1) / 2; };
  while (lo < hi) {
    const std::uint64_t mid = (lo + hi + 1) / 2;
    if (offset(mid) <= idx)
      lo = mid;
    else
      hi = mid - 1;
  }
  const std::uint64_t j = lo + 1 + (idx - offset(lo));
  return {static_cast<NodeId>(lo), static_cast<NodeId>(j)};
}

}  // namespace

Graph perturb(const Graph& g, PerturbMode mode, double fraction,
              std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0))
    throw std::invalid_argument("fraction must lie in [0,1]");
  const std::size_t count =
      static_cast<std::size_t>(fraction * static_cast<double>(g.edge_count()));
  if (count == 0) return g;

  std::vector<Edge> edges = g.edges();
  Rng rng = Rng(seed).split("perturb");

  if (mode == PerturbMode::remove_edges) {
    // Partial Fisher-Yates: the first `count` slots become the sample.
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(rng.next_below(edges.size() - i));
      std::swap(edges[i], edges[j]);
    }
    edges.erase(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(count));
    return Graph::from_edges(g.node_count(), edges, g.directed());
  }

  // flip_pairs
  if (g.directed())
    throw std::invalid_argument("flip_pairs requires an undirected graph");
  const std::uint64_t n = g.node_count();
  const std::uint64_t total_pairs = n * (n - 1) / 2;
  if (count > total_pairs)
    throw std::invalid_argument("fraction selects more pairs than exist");
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(count * 2);
  while (chosen.size() < count) chosen.insert(rng.next_below(total_pairs));

  std::unordered_set<std::uint64_t> to_remove;
  std::vector<Edge> to_add;
  for (const std::uint64_t idx : chosen) {
    const auto [i, j] = unrank_pair(idx, n);
    if (g.has_edge(i, j))
      to_remove.insert(static_cast<std::uint64_t>(i) * n + j);
    else
      to_add.push_back({i, j, 1.0});
  }
  std::vector<Edge> result;
  result.reserve(edges.size() + to_add.size());
  for (const Edge& e : edges)
    if (!to_remove.count(static_cast<std::uint64_t>(e.src) * n + e.dst))
      result.push_back(e);
  result.insert(result.end(), to_add.begin(), to_add.end());
  return Graph::from_edges(g.node_count(), result, /*directed=*/false);
}

}  // namespace netembed
