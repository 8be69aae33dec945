#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "netembed/classifiers.hpp"

namespace netembed {

namespace {

int majority_label(const std::vector<int>& counts) {
  int best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c)
    if (counts[c] > counts[best]) best = static_cast<int>(c);  // tie: smaller id
  return best;
}

double gini(const std::vector<int>& counts, int total) {
  if (total == 0) return 0.0;
  double g = 1.0;
  for (const int c : counts) {
    const double p = static_cast<double>(c) / total;
    g -= p * p;
  }
  return g;
}

struct TreeBuilder {
  const Eigen::MatrixXd& x;
  const std::vector<int>& y;
  const ForestConfig& config;
  int classes;
  Rng& rng;
  std::vector<TreeNode> nodes;

  int grow(std::vector<int>& rows, int depth) {
    std::vector<int> counts(classes, 0);
    for (const int r : rows) ++counts[y[r]];
    const int total = static_cast<int>(rows.size());

    const bool pure =
        *std::max_element(counts.begin(), counts.end()) == total;
    const bool depth_capped =
        config.max_depth >= 0 && depth >= config.max_depth;
    if (pure || depth_capped || total < 2 * config.min_leaf)
      return make_leaf(counts);

    int mtry = config.features_per_split;
    if (mtry <= 0)
      mtry = std::max(1, static_cast<int>(std::sqrt(
                             static_cast<double>(x.cols()))));
    mtry = std::min<int>(mtry, static_cast<int>(x.cols()));
    std::vector<int> features(x.cols());
    std::iota(features.begin(), features.end(), 0);
    for (int i = 0; i < mtry; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(rng.next_below(features.size() - i));
      std::swap(features[i], features[j]);
    }

    int best_feature = -1;
    double best_threshold = 0.0;
    double best_impurity = gini(counts, total);
    std::vector<std::pair<double, int>> order;
    std::vector<int> left_counts(classes);
    for (int fi = 0; fi < mtry; ++fi) {
      const int f = features[fi];
      order.clear();
      for (const int r : rows) order.emplace_back(x(r, f), y[r]);
      std::sort(order.begin(), order.end());
      std::fill(left_counts.begin(), left_counts.end(), 0);
      for (int i = 0; i + 1 < total; ++i) {
        ++left_counts[order[i].second];
        if (order[i].first == order[i + 1].first) continue;
        const int nl = i + 1, nr = total - nl;
        if (nl < config.min_leaf || nr < config.min_leaf) continue;
        std::vector<int> right_counts(classes);
        for (int c = 0; c < classes; ++c)
          right_counts[c] = counts[c] - left_counts[c];
        const double impurity =
            (nl * gini(left_counts, nl) + nr * gini(right_counts, nr)) / total;
        if (impurity < best_impurity - 1e-12) {
          best_impurity = impurity;
          best_feature = f;
          best_threshold = 0.5 * (order[i].first + order[i + 1].first);
        }
      }
    }
    if (best_feature < 0) return make_leaf(counts);

    std::vector<int> left_rows, right_rows;
    for (const int r : rows)
      (x(r, best_feature) <= best_threshold ? left_rows : right_rows)
          .push_back(r);
    if (left_rows.empty() || right_rows.empty()) return make_leaf(counts);

    const int id = static_cast<int>(nodes.size());
    nodes.push_back({best_feature, best_threshold, -1, -1, -1});
    rows.clear();
    rows.shrink_to_fit();
    nodes[id].left = grow(left_rows, depth + 1);
    nodes[id].right = grow(right_rows, depth + 1);
    return id;
  }

  int make_leaf(const std::vector<int>& counts) {
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({-1, 0.0, -1, -1, majority_label(counts)});
    return id;
  }
};

int tree_predict(const std::vector<TreeNode>& tree, const TreeNode* root,
                 Eigen::Ref<const Eigen::RowVectorXd> row) {
  const TreeNode* node = root;
  while (node->feature >= 0)
    node = &tree[row[node->feature] <= node->threshold
                     ? static_cast<std::size_t>(node->left)
                     : static_cast<std::size_t>(node->right)];
  return node->label;
}

}  // namespace

std::vector<TreeNode> fit_decision_tree(const Eigen::MatrixXd& x,
                                        const std::vector<int>& y,
                                        const std::vector<int>& rows,
                                        const ForestConfig& config,
                                        int class_count, Rng& rng) {
  if (rows.empty()) throw std::invalid_argument("no training rows");
  TreeBuilder builder{x, y, config, class_count, rng, {}};
  std::vector<int> work = rows;
  builder.grow(work, 0);
  return std::move(builder.nodes);
}

ForestModel fit_random_forest(const Eigen::MatrixXd& x,
                              const std::vector<int>& y,
                              const ForestConfig& config, std::uint64_t seed) {
  if (static_cast<std::size_t>(x.rows()) != y.size())
    throw std::invalid_argument("feature/label row mismatch");
  if (!x.allFinite()) throw std::invalid_argument("non-finite features");
  if (y.empty()) throw std::invalid_argument("empty label vector");
  if (config.trees < 1) throw std::invalid_argument("trees must be >= 1");
  int classes = 0;
  for (const int v : y) {
    if (v < 0) throw std::invalid_argument("labels must be >= 0");
    classes = std::max(classes, v + 1);
  }
  if (std::count(y.begin(), y.end(), y[0]) == static_cast<long>(y.size()))
    throw std::invalid_argument("single-class input");

  ForestModel model;
  model.class_count = classes;
  model.feature_count = x.cols();
  model.trees.reserve(config.trees);
  const Rng root(seed);
  const std::size_t n = y.size();
  for (int b = 0; b < config.trees; ++b) {
    Rng tree_rng = root.split("tree").split(static_cast<std::uint64_t>(b));
    std::vector<int> rows(n);
    if (config.bootstrap) {
      for (std::size_t i = 0; i < n; ++i)
        rows[i] = static_cast<int>(tree_rng.next_below(n));
    } else {
      std::iota(rows.begin(), rows.end(), 0);
    }
    model.trees.push_back(
        fit_decision_tree(x, y, rows, config, classes, tree_rng));
  }
  return model;
}

Eigen::MatrixXd forest_probabilities(const ForestModel& model,
                                     const Eigen::MatrixXd& x) {
  if (x.cols() != model.feature_count)
    throw std::invalid_argument("feature width mismatch");
  Eigen::MatrixXd probs =
      Eigen::MatrixXd::Zero(x.rows(), model.class_count);
  for (const auto& tree : model.trees) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      probs(i, tree_predict(tree, &tree[0], x.row(i))) += 1.0;
  }
  probs /= static_cast<double>(model.trees.size());
  return probs;
}

}  // namespace netembed
