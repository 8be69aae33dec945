#include "netembed/methods.hpp"

#include <stdexcept>

#include "netembed/factorization.hpp"
#include "netembed/grarep.hpp"
#include "netembed/line.hpp"
#include "netembed/lsm.hpp"
#include "netembed/rng.hpp"
#include "netembed/skipgram.hpp"
#include "netembed/spectral.hpp"
#include "netembed/util.hpp"

namespace netembed {

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = {
      "deepwalk", "node2vec", "line1", "line2",  "gf",
      "eigenmap", "spectral", "grarep", "lsm"};
  return names;
}

bool is_known_method(const std::string& name) {
  for (const auto& n : method_names())
    if (n == name) return true;
  return false;
}

bool is_walk_method(const std::string& name) {
  return name == "deepwalk" || name == "node2vec";
}

bool is_deterministic_method(const std::string& name) {
  return name == "eigenmap" || name == "spectral" || name == "grarep" ||
         name == "lsm";
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  return Rng(seed).split(label).next_u64();
}

MethodConfig default_method_config(const std::string& name) {
  if (!is_known_method(name))
    throw std::invalid_argument("unknown method '" + name + "'");
  MethodConfig m;
  m.name = name;
  if (name == "line1" || name == "line2" || name == "gf") m.train.epochs = 200;
  if (name == "node2vec") m.walk.node2vec = Node2vecParams{};
  return m;
}

Embedding train_method(const Graph& g, const MethodConfig& method, int dim,
                       std::uint64_t seed, StageSeconds* times) {
  TrainConfig train = method.train;
  train.dim = dim;
  StageSeconds local;
  StageSeconds& out = times ? *times : local;
  Embedding emb;

  if (is_walk_method(method.name)) {
    WalkConfig walk = method.walk;
    if (method.name == "deepwalk")
      walk.node2vec.reset();
    else if (!walk.node2vec)
      walk.node2vec = Node2vecParams{};
    Stopwatch sw;
    const WalkCorpus corpus =
        generate_corpus(g, walk, derive_seed(seed, "corpus"));
    out.walks = sw.seconds();
    sw.reset();
    emb = train_skipgram(corpus, train, derive_seed(seed, "sgd"));
    out.train = sw.seconds();
  } else {
    Stopwatch sw;
    if (method.name == "line1" || method.name == "line2") {
      train.line_order = method.name == "line1" ? 1 : 2;
      emb = train_line(g, train, derive_seed(seed, "sgd"));
    } else if (method.name == "gf") {
      emb = graph_factorization(g, train, derive_seed(seed, "sgd"));
    } else if (method.name == "eigenmap") {
      emb = spectral_embedding(g, dim, SpectralKind::laplacian_eigenmap,
                               method.spectral_solver);
    } else if (method.name == "spectral") {
      emb = spectral_embedding(g, dim, SpectralKind::adjacency_spectral,
                               method.spectral_solver);
    } else if (method.name == "grarep") {
      emb = grarep(g, dim, train.grarep_steps, train.grarep_shift, seed);
    } else if (method.name == "lsm") {
      LsmFit fit = fit_latent_space(g, dim, train, seed);
      emb.center = std::move(fit.positions);
    } else {
      throw std::invalid_argument("unknown method '" + method.name + "'");
    }
    out.train = sw.seconds();
  }

  emb.method = method.name;
  emb.seed = seed;
  return emb;
}

}  // namespace netembed
