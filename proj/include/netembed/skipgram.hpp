#pragma once

#include "netembed/embedding.hpp"
#include "netembed/negative_sampling.hpp"
#include "netembed/walks.hpp"

namespace netembed {

// SkipGram with negative sampling over a walk corpus. For each walk position
// and each context node within `config.window` (clamped at walk ends), takes
// one ascent step on the negative-sampling objective with k noise draws.
// Center rows start Uniform(-0.5/d, 0.5/d), context rows start at zero.
// Single-threaded runs are bit-reproducible for a fixed seed;
// config.threads > 1 applies unsynchronized sparse row updates
// (Hogwild-style) and is deliberately nondeterministic.
Embedding train_skipgram(const WalkCorpus& corpus, const TrainConfig& config,
                         std::uint64_t seed);

}  // namespace netembed
