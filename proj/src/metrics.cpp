#include "netembed/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace netembed {

double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("score/label length mismatch");
  const std::size_t n = scores.size();
  std::size_t pos = 0;
  for (const int l : labels) {
    if (l != 0 && l != 1) throw std::invalid_argument("labels must be 0/1");
    pos += static_cast<std::size_t>(l);
  }
  if (pos == 0 || pos == n)
    throw std::invalid_argument("both classes must be present");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&scores](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  // Rank sum of positives with average ranks for ties.
  double rank_sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t)
      if (labels[order[t]] == 1) rank_sum += avg_rank;
    i = j + 1;
  }
  const double m = static_cast<double>(pos);
  const double neg = static_cast<double>(n - pos);
  return (rank_sum - m * (m + 1.0) / 2.0) / (m * neg);
}

ClassificationMetrics classification_metrics(const std::vector<int>& pred,
                                             const std::vector<int>& truth) {
  if (pred.size() != truth.size())
    throw std::invalid_argument("prediction/truth length mismatch");
  if (pred.empty()) throw std::invalid_argument("empty input");
  int classes = 0;
  for (const auto& v : {pred, truth})
    for (const int c : v) {
      if (c < 0) throw std::invalid_argument("labels must be >= 0");
      classes = std::max(classes, c + 1);
    }

  std::vector<long> tp(classes, 0), fp(classes, 0), fn(classes, 0);
  long correct = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] == truth[i]) {
      ++tp[truth[i]];
      ++correct;
    } else {
      ++fp[pred[i]];
      ++fn[truth[i]];
    }
  }

  ClassificationMetrics out;
  out.accuracy = static_cast<double>(correct) / static_cast<double>(pred.size());

  double f1_sum = 0.0;
  int f1_classes = 0;
  long tp_all = 0, fp_all = 0, fn_all = 0;
  for (int c = 0; c < classes; ++c) {
    tp_all += tp[c];
    fp_all += fp[c];
    fn_all += fn[c];
    if (tp[c] + fp[c] + fn[c] == 0) continue;  // absent from both sides
    const double denom = 2.0 * tp[c] + fp[c] + fn[c];
    f1_sum += denom > 0.0 ? 2.0 * tp[c] / denom : 0.0;
    ++f1_classes;
  }
  out.macro_f1 = f1_classes > 0 ? f1_sum / f1_classes : 0.0;
  const double micro_denom = 2.0 * tp_all + fp_all + fn_all;
  out.micro_f1 = micro_denom > 0.0 ? 2.0 * tp_all / micro_denom : 0.0;
  return out;
}

double adjusted_rand_index(const std::vector<int>& a,
                           const std::vector<int>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("partition length mismatch");
  if (a.empty()) throw std::invalid_argument("empty input");
  int ka = 0, kb = 0;
  for (const int v : a) {
    if (v < 0) throw std::invalid_argument("labels must be >= 0");
    ka = std::max(ka, v + 1);
  }
  for (const int v : b) {
    if (v < 0) throw std::invalid_argument("labels must be >= 0");
    kb = std::max(kb, v + 1);
  }

  std::vector<std::vector<long>> table(ka, std::vector<long>(kb, 0));
  for (std::size_t i = 0; i < a.size(); ++i) ++table[a[i]][b[i]];

  auto choose2 = [](long m) { return 0.5 * static_cast<double>(m) * (m - 1); };
  double index = 0.0;
  std::vector<long> row(ka, 0), col(kb, 0);
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < kb; ++j) {
      index += choose2(table[i][j]);
      row[i] += table[i][j];
      col[j] += table[i][j];
    }
  double sum_row = 0.0, sum_col = 0.0;
  for (const long r : row) sum_row += choose2(r);
  for (const long c : col) sum_col += choose2(c);
  const double total = choose2(static_cast<long>(a.size()));
  const double expected = sum_row * sum_col / total;
  const double max_index = 0.5 * (sum_row + sum_col);
  if (max_index == expected) return 1.0;  // both partitions trivial
  return (index - expected) / (max_index - expected);
}

}  // namespace netembed
