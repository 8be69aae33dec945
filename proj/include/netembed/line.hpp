#pragma once

#include "netembed/embedding.hpp"
#include "netembed/graph.hpp"

namespace netembed {

// LINE via edge-sampling SGD: arcs drawn proportional to their weight from
// an alias table, one positive plus k negative-sampling steps per draw,
// config.epochs * edge_count() draws in total. First order ties both roles
// to the center vectors; second order trains a separate context matrix
// (returned in Embedding.context). Noise is degree^noise_exponent.
// config.threads > 1 runs asynchronous unsynchronized updates.
Embedding train_line(const Graph& g, const TrainConfig& config,
                     std::uint64_t seed);

// Full first-order objective -sum_{(i,j) in E} W_ij log sigmoid(z_i . z_j)
// over unique edges; exposed for monitoring and tests.
double line_first_order_loss(const Graph& g, const Eigen::MatrixXd& z);

}  // namespace netembed
