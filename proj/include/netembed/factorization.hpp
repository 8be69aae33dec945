#pragma once

#include <vector>

#include "netembed/embedding.hpp"
#include "netembed/graph.hpp"

namespace netembed {

// Graph factorization: SGD on
//   1/2 sum_{(i,j) in E} (W_ij - z_i . z_j)^2 + ridge/2 * sum_i |z_i|^2
// over observed edges only, edge order reshuffled every epoch. The ridge is
// applied as a proximal (implicit) shrink per edge visit, which keeps steps
// stable for arbitrarily large ridge. When `loss_trace` is given, the full
// objective is appended after every epoch.
Embedding graph_factorization(const Graph& g, const TrainConfig& config,
                              std::uint64_t seed,
                              std::vector<double>* loss_trace = nullptr);

double factorization_loss(const Graph& g, const Eigen::MatrixXd& z,
                          double ridge);

}  // namespace netembed
