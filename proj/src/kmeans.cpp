#include <limits>
#include <stdexcept>

#include "netembed/clustering.hpp"
#include "netembed/rng.hpp"

namespace netembed {

namespace {

KmeansResult lloyd_once(const Eigen::MatrixXd& x, int k, Rng& rng,
                        int max_iter) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();

  // k-means++ seeding.
  Eigen::MatrixXd centroids(k, p);
  Eigen::VectorXd dist2 =
      Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  centroids.row(0) = x.row(static_cast<Eigen::Index>(rng.next_below(n)));
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = (x.row(i) - centroids.row(c - 1)).squaredNorm();
      if (d < dist2[i]) dist2[i] = d;
      total += dist2[i];
    }
    Eigen::Index pick = 0;
    if (total > 0.0) {
      const double u = rng.next_real() * total;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += dist2[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<Eigen::Index>(rng.next_below(n));
    }
    centroids.row(c) = x.row(pick);
  }

  KmeansResult result;
  result.assignments.assign(n, -1);
  std::vector<int> sizes(k, 0);
  for (int it = 0; it < max_iter; ++it) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (x.row(i) - centroids.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        const double d = (x.row(i) - centroids.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (result.assignments[i] != best) {
        result.assignments[i] = best;
        changed = true;
      }
    }
    if (!changed) break;

    centroids.setZero();
    std::fill(sizes.begin(), sizes.end(), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      centroids.row(result.assignments[i]) += x.row(i);
      ++sizes[result.assignments[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[c] > 0) {
        centroids.row(c) /= static_cast<double>(sizes[c]);
      } else {
        // Empty cluster: re-seed on the point farthest from its centroid.
        Eigen::Index far = 0;
        double far_d = -1.0;
        for (Eigen::Index i = 0; i < n; ++i) {
          const double d =
              (x.row(i) - centroids.row(result.assignments[i])).squaredNorm();
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        centroids.row(c) = x.row(far);
      }
    }
  }

  result.inertia = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    result.inertia +=
        (x.row(i) - centroids.row(result.assignments[i])).squaredNorm();
  result.centroids = std::move(centroids);
  return result;
}

}  // namespace

KmeansResult kmeans(const Eigen::MatrixXd& x, int k, std::uint64_t seed,
                    int max_iter, int restarts) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > x.rows()) throw std::invalid_argument("k exceeds sample count");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");

  const Rng root(seed);
  KmeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng rng = root.split("restart").split(static_cast<std::uint64_t>(r));
    KmeansResult cand = lloyd_once(x, k, rng, max_iter);
    if (cand.inertia < best.inertia) best = std::move(cand);
  }
  return best;
}

}  // namespace netembed
