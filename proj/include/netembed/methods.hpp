#pragma once

#include <string>
#include <vector>

#include "netembed/eigensolver.hpp"
#include "netembed/embedding.hpp"
#include "netembed/graph.hpp"
#include "netembed/walks.hpp"

namespace netembed {

// One embedding method instance: a registry name plus its hyperparameters.
// Names: deepwalk, node2vec, line1, line2, gf, eigenmap, spectral, grarep,
// lsm.
struct MethodConfig {
  std::string name = "deepwalk";
  TrainConfig train;
  WalkConfig walk;  // used by deepwalk / node2vec only
  SolverChoice spectral_solver = SolverChoice::automatic;
};

struct StageSeconds {
  double walks = 0.0;
  double train = 0.0;
};

const std::vector<std::string>& method_names();
bool is_known_method(const std::string& name);
bool is_walk_method(const std::string& name);
// Methods whose output depends only on the graph (not the seed).
bool is_deterministic_method(const std::string& name);

// Per-method defaults. `epochs` means corpus passes for walk methods but
// samples-per-edge for the edge-sampling trainers, so the latter default
// much higher.
MethodConfig default_method_config(const std::string& name);

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

// Trains `method` at dimension `dim` on g; stage wall-times (monotonic
// clock) are reported through `times` when given. Throws
// std::invalid_argument for unknown names.
Embedding train_method(const Graph& g, const MethodConfig& method, int dim,
                       std::uint64_t seed, StageSeconds* times = nullptr);

}  // namespace netembed
