#include "netembed/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "netembed/errors.hpp"

namespace netembed {

Embedding spectral_embedding(const Graph& g, int d, SpectralKind kind,
                             SolverChoice solver) {
  if (g.directed())
    throw std::invalid_argument("spectral embedding requires undirected input");
  const std::size_t n = g.node_count();
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (static_cast<std::size_t>(d) >= n)
    throw std::invalid_argument("dimension must be smaller than node count");
  if (kind == SpectralKind::laplacian_eigenmap) {
    for (NodeId v = 0; v < n; ++v)
      if (g.degree(v) == 0) throw IsolatedNodeError(v);
  }

  auto [lsym, deg] = laplacian(g, LaplacianKind::sym_normalized);
  // |L_sym| <= 2, so shifting the trivial direction by 3 moves it past every
  // wanted eigenvalue.
  Eigen::VectorXd trivial = deg.cwiseSqrt();
  const EigenPairs pairs =
      smallest_eigenpairs(lsym, d, &trivial, 3.0, solver);

  Eigen::MatrixXd z = pairs.vectors;
  if (kind == SpectralKind::laplacian_eigenmap) {
    for (Eigen::Index v = 0; v < z.rows(); ++v)
      z.row(v) /= std::sqrt(deg[v]);
  }
  apply_sign_convention(z);

  Embedding emb;
  emb.method = kind == SpectralKind::laplacian_eigenmap ? "eigenmap" : "spectral";
  emb.center = std::move(z);
  return emb;
}

}  // namespace netembed
