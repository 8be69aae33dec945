#include "netembed/grarep.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "netembed/eigensolver.hpp"
#include "netembed/errors.hpp"

namespace netembed {

Eigen::MatrixXd dense_transition_matrix(const Graph& g) {
  const std::size_t n = g.node_count();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (NodeId u = 0; u < n; ++u) {
    if (g.degree(u) == 0) throw IsolatedNodeError(u);
    const auto nbrs = g.neighbors(u);
    const auto ws = g.neighbor_weights(u);
    const double total = g.strength(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      t(u, nbrs[i]) = ws[i] / total;
  }
  return t;
}

Embedding grarep(const Graph& g, int d, int max_step, double shift,
                 std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (max_step < 1) throw std::invalid_argument("max_step must be >= 1");
  if (!(shift > 0.0)) throw std::invalid_argument("shift must be > 0");
  const std::size_t n = g.node_count();
  const int rank = (d + max_step - 1) / max_step;  // ceil(d / K)
  if (static_cast<std::size_t>(rank) > n)
    throw std::invalid_argument("requested rank exceeds node count");

  const Eigen::MatrixXd t = dense_transition_matrix(g);
  const double log_shift = std::log(shift / static_cast<double>(n));

  Embedding emb;
  emb.method = "grarep";
  emb.seed = seed;
  emb.center.resize(static_cast<Eigen::Index>(n),
                    static_cast<Eigen::Index>(rank) * max_step);
  Eigen::MatrixXd context(emb.center.rows(), emb.center.cols());

  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= max_step; ++k) {
    power = power * t;  // T^k
    const Eigen::RowVectorXd colsum = power.colwise().sum();
    Eigen::MatrixXd x(n, n);
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double p = power(i, j);
        x(i, j) = p > 0.0
                      ? std::max(std::log(p / colsum[j]) - log_shift, 0.0)
                      : 0.0;
      }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::MatrixXd u = svd.matrixU().leftCols(rank);
    Eigen::MatrixXd v = svd.matrixV().leftCols(rank);
    // Orient U deterministically and keep U S V' intact by flipping V along.
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      const double cutoff = 1e-9 * u.col(c).cwiseAbs().maxCoeff();
      for (Eigen::Index r = 0; r < u.rows(); ++r) {
        if (std::abs(u(r, c)) > cutoff) {
          if (u(r, c) < 0.0) {
            u.col(c) = -u.col(c);
            v.col(c) = -v.col(c);
          }
          break;
        }
      }
    }
    const Eigen::VectorXd sqrt_sigma =
        svd.singularValues().head(rank).cwiseSqrt();
    emb.center.middleCols(static_cast<Eigen::Index>(k - 1) * rank, rank) =
        u * sqrt_sigma.asDiagonal();
    context.middleCols(static_cast<Eigen::Index>(k - 1) * rank, rank) =
        v * sqrt_sigma.asDiagonal();
  }
  emb.context = std::move(context);
  return emb;
}

}  // namespace netembed
