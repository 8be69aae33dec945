#pragma once

#include <vector>

namespace netembed {

// Mann-Whitney AUC with ties contributing 1/2. Throws when either class is
// absent.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

struct ClassificationMetrics {
  double accuracy = 0.0;
  double macro_f1 = 0.0;  // unweighted mean over classes present anywhere
  double micro_f1 = 0.0;  // pooled counts; equals accuracy for single-label
};

ClassificationMetrics classification_metrics(const std::vector<int>& pred,
                                             const std::vector<int>& truth);

// Adjusted Rand index via pair counting; 1 for identical partitions up to
// relabeling, ~0 for independent ones.
double adjusted_rand_index(const std::vector<int>& a,
                           const std::vector<int>& b);

}  // namespace netembed
