#include "netembed/embedding.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <Eigen/SVD>

#include "netembed/util.hpp"

namespace netembed {

void TrainConfig::validate() const {
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (!(learning_rate > 0.0))
    throw std::invalid_argument("learning_rate must be > 0");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (negative_samples < 1)
    throw std::invalid_argument("negative_samples must be >= 1");
  if (window < 1) throw std::invalid_argument("window must be >= 1");
  if (!(noise_exponent > 0.0))
    throw std::invalid_argument("noise_exponent must be > 0");
  if (line_order != 1 && line_order != 2)
    throw std::invalid_argument("line_order must be 1 or 2");
  if (grarep_steps < 1) throw std::invalid_argument("grarep_steps must be >= 1");
  if (!(grarep_shift > 0.0))
    throw std::invalid_argument("grarep_shift must be > 0");
  if (!(ridge >= 0.0)) throw std::invalid_argument("ridge must be >= 0");
  if (lsm_max_steps < 1)
    throw std::invalid_argument("lsm_max_steps must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

double similarity(Eigen::Ref<const Eigen::VectorXd> u,
                  Eigen::Ref<const Eigen::VectorXd> v, SimilarityKind kind) {
  if (u.size() != v.size())
    throw std::invalid_argument("similarity: dimension mismatch");
  switch (kind) {
    case SimilarityKind::dot:
      return u.dot(v);
    case SimilarityKind::neg_euclidean:
      return -(u - v).norm();
    case SimilarityKind::cosine:
    case SimilarityKind::angular: {
      const double nu = u.norm(), nv = v.norm();
      if (nu == 0.0 || nv == 0.0)
        throw std::invalid_argument("cosine/angular need nonzero vectors");
      double c = u.dot(v) / (nu * nv);
      if (kind == SimilarityKind::cosine) return c;
      c = std::min(1.0, std::max(-1.0, c));
      return std::acos(c);
    }
  }
  throw std::invalid_argument("unknown similarity kind");
}

SimilarityKind similarity_from_name(const std::string& name) {
  if (name == "dot") return SimilarityKind::dot;
  if (name == "neg_euclidean") return SimilarityKind::neg_euclidean;
  if (name == "cosine") return SimilarityKind::cosine;
  if (name == "angular") return SimilarityKind::angular;
  throw std::invalid_argument("unknown similarity '" + name + "'");
}

double procrustes_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("procrustes_distance: shape mismatch");
  Eigen::MatrixXd ac = a.rowwise() - a.colwise().mean();
  Eigen::MatrixXd bc = b.rowwise() - b.colwise().mean();
  const double na = ac.norm();
  if (na == 0.0)
    throw std::invalid_argument("procrustes_distance: zero reference matrix");
  const double nb = bc.norm();
  if (nb == 0.0) return 1.0;  // best approximation of A by 0 is scale 0

  // min_{s,Q} |A - s B Q|: Q from the SVD of B'A, s = tr(Sigma) / |B|^2.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(bc.transpose() * ac,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd q = svd.matrixU() * svd.matrixV().transpose();
  const double s = svd.singularValues().sum() / (nb * nb);
  return (ac - s * bc * q).norm() / na;
}

void save_word2vec(const Embedding& emb, const std::string& path,
                   const std::vector<std::string>* names) {
  if (names && static_cast<Eigen::Index>(names->size()) != emb.center.rows())
    throw std::invalid_argument("name count does not match embedding rows");
  auto render = [names](const Eigen::MatrixXd& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (names)
        out << (*names)[static_cast<std::size_t>(i)];
      else
        out << i;
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        out << ' ' << format_double(m(i, j));
      out << '\n';
    }
    return out.str();
  };
  write_file_atomic(path, render(emb.center));
  if (emb.context) write_file_atomic(path + ".context", render(*emb.context));
}

namespace {

Eigen::MatrixXd read_word2vec_matrix(const std::string& path,
                                     std::vector<std::string>* names) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Eigen::Index n = 0, d = 0;
  if (!(in >> n >> d) || n < 0 || d < 1)
    throw std::runtime_error("bad word2vec header in " + path);
  Eigen::MatrixXd m(n, d);
  if (names) names->resize(static_cast<std::size_t>(n));
  for (Eigen::Index row = 0; row < n; ++row) {
    std::string id;
    if (!(in >> id)) throw std::runtime_error("missing node id in " + path);
    if (names) (*names)[static_cast<std::size_t>(row)] = id;
    for (Eigen::Index j = 0; j < d; ++j)
      if (!(in >> m(row, j)))
        throw std::runtime_error("truncated vector in " + path);
  }
  return m;
}

}  // namespace

Embedding load_word2vec(const std::string& path,
                        std::vector<std::string>* names) {
  Embedding emb;
  emb.center = read_word2vec_matrix(path, names);
  const std::string ctx = path + ".context";
  if (std::filesystem::exists(ctx))
    emb.context = read_word2vec_matrix(ctx, nullptr);
  return emb;
}

}  // namespace netembed
