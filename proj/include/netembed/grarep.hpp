#pragma once

#include "netembed/embedding.hpp"
#include "netembed/graph.hpp"

namespace netembed {

// Dense row-stochastic transition matrix T = D^{-1} W. Throws
// IsolatedNodeError when a row has no mass.
Eigen::MatrixXd dense_transition_matrix(const Graph& g);

// GraRep: for each step k = 1..K form the k-step transition matrix T^k,
// take the column-normalized positive log transform
//   X_k(i,j) = max( log(T^k(i,j) / colsum_j) - log(shift / n), 0 ),
// factor it by truncated SVD at rank ceil(d / K), and concatenate the
// U_k S_k^{1/2} blocks (context: V_k S_k^{1/2}) across k. Deterministic;
// the classical matrix-factorization route to the k-step objective.
Embedding grarep(const Graph& g, int d, int max_step, double shift,
                 std::uint64_t seed);

}  // namespace netembed
