#pragma once

#include "netembed/eigensolver.hpp"
#include "netembed/embedding.hpp"
#include "netembed/graph.hpp"

namespace netembed {

enum class SpectralKind { adjacency_spectral, laplacian_eigenmap };

// Spectral embeddings from the d smallest nontrivial eigenpairs of the
// symmetric normalized Laplacian (the trivial direction D^{1/2} 1 is
// deflated before solving, so on disconnected graphs the remaining
// null-space directions — which separate components — are kept).
//
// adjacency_spectral returns the eigenvectors of L_sym directly;
// laplacian_eigenmap solves the generalized problem L u = lambda D u through
// the substitution u = D^{-1/2} y, which makes Z' D Z = I hold by
// construction. Columns follow the first-nonzero-entry-positive sign
// convention. Throws on directed input, d >= n, and (eigenmap only)
// zero-degree nodes.
Embedding spectral_embedding(const Graph& g, int d, SpectralKind kind,
                             SolverChoice solver = SolverChoice::automatic);

}  // namespace netembed
