#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace netembed {

struct KmeansResult {
  std::vector<int> assignments;
  Eigen::MatrixXd centroids;  // k x p
  double inertia = 0.0;       // sum of squared distances to own centroid
};

// Lloyd iterations from k-means++ seeds; best of `restarts` runs by inertia.
// Throws std::invalid_argument when k < 1 or k > n.
KmeansResult kmeans(const Eigen::MatrixXd& x, int k, std::uint64_t seed,
                    int max_iter = 300, int restarts = 10);

}  // namespace netembed
