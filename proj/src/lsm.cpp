#include "netembed/lsm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "netembed/eigensolver.hpp"
#include "netembed/negative_sampling.hpp"

namespace netembed {

namespace {

// log(1 + e^x) without overflow.
double log1p_exp(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

void check_undirected(const Graph& g) {
  if (g.directed())
    throw std::invalid_argument("latent space model requires undirected input");
}

}  // namespace

double lsm_log_likelihood(const Graph& g, const Eigen::MatrixXd& positions,
                          double alpha) {
  check_undirected(g);
  const Eigen::Index n = positions.rows();
  double ll = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double eta = alpha - (positions.row(i) - positions.row(j)).norm();
      if (g.has_edge(static_cast<NodeId>(i), static_cast<NodeId>(j))) ll += eta;
      ll -= log1p_exp(eta);
    }
  }
  return ll;
}

Eigen::MatrixXd lsm_gradient(const Graph& g, const Eigen::MatrixXd& positions,
                             double alpha, double* grad_alpha) {
  check_undirected(g);
  const Eigen::Index n = positions.rows();
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(n, positions.cols());
  double ga = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Eigen::RowVectorXd diff = positions.row(i) - positions.row(j);
      const double dist = diff.norm();
      const double eta = alpha - dist;
      const double r =
          (g.has_edge(static_cast<NodeId>(i), static_cast<NodeId>(j)) ? 1.0
                                                                      : 0.0) -
          sigmoid(eta);
      ga += r;
      if (dist > 1e-12) {
        const Eigen::RowVectorXd dir = diff / dist;
        grad.row(i) -= r * dir;
        grad.row(j) += r * dir;
      }
    }
  }
  if (grad_alpha) *grad_alpha = ga;
  return grad;
}

LsmFit fit_latent_space(const Graph& g, int d, const TrainConfig& config,
                        std::uint64_t seed) {
  check_undirected(g);
  const std::size_t n = g.node_count();
  if (n < 2) throw std::invalid_argument("latent space model needs n >= 2");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (static_cast<std::size_t>(d) > n)
    throw std::invalid_argument("dimension exceeds node count");

  // Adjacency spectral start: d leading eigenvectors, unit RMS row norm.
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(g.arc_count());
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    const auto ws = g.neighbor_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      trip.emplace_back(u, nbrs[i], ws[i]);
  }
  Eigen::SparseMatrix<double> adj(n, n);
  adj.setFromTriplets(trip.begin(), trip.end());
  EigenPairs lead = largest_eigenpairs(adj, d);
  apply_sign_convention(lead.vectors);
  Eigen::MatrixXd z = lead.vectors;
  const double rms = z.norm() / std::sqrt(static_cast<double>(n));
  if (rms > 0.0) z /= rms;

  const double density = 2.0 * static_cast<double>(g.edge_count()) /
                         (static_cast<double>(n) * static_cast<double>(n - 1));
  const double clamped = std::clamp(density, 1e-6, 1.0 - 1e-6);
  double alpha = std::log(clamped / (1.0 - clamped));

  LsmFit fit;
  double ll = lsm_log_likelihood(g, z, alpha);
  fit.loglik_trace.push_back(ll);

  double step = 1.0 / static_cast<double>(n);  // scale-aware initial step
  constexpr double kArmijo = 1e-4;
  for (int it = 0; it < config.lsm_max_steps; ++it) {
    double grad_alpha = 0.0;
    const Eigen::MatrixXd grad = lsm_gradient(g, z, alpha, &grad_alpha);
    const double grad_sq = grad.squaredNorm() + grad_alpha * grad_alpha;
    if (grad_sq < 1e-16) break;

    bool accepted = false;
    for (int halvings = 0; halvings < 60; ++halvings) {
      const Eigen::MatrixXd z_new = z + step * grad;
      const double alpha_new = alpha + step * grad_alpha;
      const double ll_new = lsm_log_likelihood(g, z_new, alpha_new);
      if (ll_new >= ll + kArmijo * step * grad_sq) {
        z = z_new;
        alpha = alpha_new;
        ll = ll_new;
        fit.loglik_trace.push_back(ll);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // stalled at numerical precision
    step *= 2.0;
  }

  z.rowwise() -= z.colwise().mean().eval();  // translation gauge
  fit.positions = std::move(z);
  fit.alpha = alpha;
  (void)seed;  // estimation is deterministic; kept for interface parity
  return fit;
}

}  // namespace netembed
