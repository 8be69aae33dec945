#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

namespace netembed {

// Node representations: one center vector per node, plus a paired context
// matrix for dual-role methods (SkipGram, LINE 2nd order, GraRep).
struct Embedding {
  Eigen::MatrixXd center;                  // n x d
  std::optional<Eigen::MatrixXd> context;  // n x d when dual-role
  std::string method;
  std::uint64_t seed = 0;

  Eigen::Index node_count() const { return center.rows(); }
  int dim() const { return static_cast<int>(center.cols()); }
};

// Shared trainer knobs; method-specific fields are ignored by methods that
// do not use them. Learning rates decay linearly from `learning_rate` to
// 1e-4 * learning_rate over the total update count.
struct TrainConfig {
  int dim = 16;
  double learning_rate = 0.025;
  int epochs = 1;            // passes over the corpus / samples per edge
  int negative_samples = 5;  // k in the negative-sampling objective
  int window = 5;            // SkipGram context radius
  double noise_exponent = 0.75;

  int line_order = 2;        // LINE: 1 = first-order, 2 = second-order
  int grarep_steps = 2;      // GraRep K
  double grarep_shift = 1.0; // GraRep lambda
  double ridge = 1e-2;       // graph factorization lambda
  int lsm_max_steps = 300;   // latent space model ascent steps

  int threads = 1;  // >1 enables asynchronous (Hogwild-style) updates

  void validate() const;  // throws std::invalid_argument

  double lr_floor() const { return 1e-4 * learning_rate; }
  // Learning rate after `done` of `total` updates.
  double lr_at(std::uint64_t done, std::uint64_t total) const {
    const double frac =
        total == 0 ? 1.0 : static_cast<double>(done) / static_cast<double>(total);
    const double lr = learning_rate * (1.0 - frac);
    return lr < lr_floor() ? lr_floor() : lr;
  }
};

enum class SimilarityKind { dot, neg_euclidean, cosine, angular };

// dot = u'v; neg_euclidean = -|u - v|; cosine = u'v / (|u| |v|);
// angular = arccos(clamped cosine), reported as a dissimilarity.
// cosine/angular throw std::invalid_argument on a zero vector.
double similarity(Eigen::Ref<const Eigen::VectorXd> u,
                  Eigen::Ref<const Eigen::VectorXd> v, SimilarityKind kind);

SimilarityKind similarity_from_name(const std::string& name);

// Residual min_{s, Q orthogonal} |A - s B Q|_F / |A|_F after column-centering
// both sides; invariant to rotation, reflection, scale, and translation.
// Throws std::invalid_argument when the centered A is all zero.
double procrustes_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// word2vec text format: header "n d", then "id v1 ... vd" per node with
// 17-significant-digit decimals. The id column carries external node names
// when `names` is given (row i of the matrix gets names[i]), internal row
// indices otherwise. A context matrix goes to "<path>.context". Loading
// keeps file order as row order and reports the id tokens through `names`.
void save_word2vec(const Embedding& emb, const std::string& path,
                   const std::vector<std::string>* names = nullptr);
Embedding load_word2vec(const std::string& path,
                        std::vector<std::string>* names = nullptr);

}  // namespace netembed
