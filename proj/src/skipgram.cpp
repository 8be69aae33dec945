#include "netembed/skipgram.hpp"

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "netembed/util.hpp"

namespace netembed {

namespace {

// One ascent step on the tuple objective; gradients for the center row are
// accumulated and applied after the negatives, so every term sees the
// center value the tuple started with.
inline void sgd_pair_step(double* center_row, double* context_rows,
                          std::size_t d, NodeId positive, int k,
                          const NoiseDistribution& noise, Rng& rng, double lr,
                          std::vector<double>& center_acc) {
  center_acc.assign(d, 0.0);
  {
    double* pos = context_rows + static_cast<std::size_t>(positive) * d;
    double dot = 0.0;
    for (std::size_t j = 0; j < d; ++j) dot += center_row[j] * pos[j];
    const double g = lr * (1.0 - sigmoid(dot));
    for (std::size_t j = 0; j < d; ++j) {
      center_acc[j] += g * pos[j];
      pos[j] += g * center_row[j];
    }
  }
  for (int l = 0; l < k; ++l) {
    const NodeId nid = noise.sample(rng);
    double* neg = context_rows + static_cast<std::size_t>(nid) * d;
    double dot = 0.0;
    for (std::size_t j = 0; j < d; ++j) dot += center_row[j] * neg[j];
    const double g = -lr * sigmoid(dot);
    for (std::size_t j = 0; j < d; ++j) {
      center_acc[j] += g * neg[j];
      neg[j] += g * center_row[j];
    }
  }
  for (std::size_t j = 0; j < d; ++j) center_row[j] += center_acc[j];
}

}  // namespace

Embedding train_skipgram(const WalkCorpus& corpus, const TrainConfig& config,
                         std::uint64_t seed) {
  config.validate();
  if (corpus.walks.empty()) throw std::invalid_argument("empty corpus");

  const std::size_t n = corpus.node_count;
  const std::size_t d = static_cast<std::size_t>(config.dim);
  const NoiseDistribution noise =
      unigram_noise(corpus, config.noise_exponent);  // validates node ids too

  const Rng root(seed);
  std::vector<double> center(n * d);
  std::vector<double> context(n * d, 0.0);
  {
    Rng init = root.split("init");
    const double half = 0.5 / static_cast<double>(d);
    for (double& x : center) x = init.next_uniform(-half, half);
  }

  // Total (center, context) pairs, for the linear learning-rate schedule.
  const int w = config.window;
  std::uint64_t total_pairs = 0;
  for (const auto& walk : corpus.walks) {
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i)
      total_pairs += static_cast<std::uint64_t>(
          std::min(len - 1, i + w) - std::max(0, i - w));
  }
  total_pairs *= static_cast<std::uint64_t>(config.epochs);

  std::atomic<std::uint64_t> done{0};

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const Rng epoch_rng =
        root.split("sgd").split(static_cast<std::uint64_t>(epoch));
    parallel_chunks(
        corpus.walks.size(), config.threads,
        [&](std::size_t lo, std::size_t hi) {
          Rng rng = epoch_rng.split(lo);
          std::vector<double> acc;
          for (std::size_t wi = lo; wi < hi; ++wi) {
            const auto& walk = corpus.walks[wi];
            const int len = static_cast<int>(walk.size());
            for (int i = 0; i < len; ++i) {
              double* center_row =
                  center.data() + static_cast<std::size_t>(walk[i]) * d;
              const int c_lo = std::max(0, i - w);
              const int c_hi = std::min(len - 1, i + w);
              for (int c = c_lo; c <= c_hi; ++c) {
                if (c == i) continue;
                const std::uint64_t t =
                    done.fetch_add(1, std::memory_order_relaxed);
                sgd_pair_step(center_row, context.data(), d, walk[c],
                              config.negative_samples, noise, rng,
                              config.lr_at(t, total_pairs), acc);
              }
            }
          }
        });
  }

  Embedding emb;
  emb.method = "skipgram";
  emb.seed = seed;
  emb.center.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  Eigen::MatrixXd ctx(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      emb.center(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          center[i * d + j];
      ctx(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          context[i * d + j];
    }
  emb.context = std::move(ctx);
  return emb;
}

}  // namespace netembed
