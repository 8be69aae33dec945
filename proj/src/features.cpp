#include "netembed/features.hpp"

#include <cmath>
#include <stdexcept>

namespace netembed {

void Standardizer::fit(const Eigen::MatrixXd& x, const std::vector<int>& rows) {
  if (rows.empty()) throw std::invalid_argument("no training rows");
  mean_ = Eigen::RowVectorXd::Zero(x.cols());
  for (const int r : rows) mean_ += x.row(r);
  mean_ /= static_cast<double>(rows.size());
  Eigen::RowVectorXd var = Eigen::RowVectorXd::Zero(x.cols());
  for (const int r : rows) var += (x.row(r) - mean_).cwiseAbs2();
  var /= static_cast<double>(rows.size());
  scale_ = var.cwiseSqrt();
  for (Eigen::Index c = 0; c < scale_.size(); ++c)
    if (scale_[c] == 0.0) scale_[c] = 1.0;
}

Eigen::MatrixXd Standardizer::transform(const Eigen::MatrixXd& x) const {
  if (x.cols() != mean_.size())
    throw std::invalid_argument("standardizer width mismatch");
  return (x.rowwise() - mean_).array().rowwise() / scale_.array();
}

Eigen::MatrixXd assemble_features(const Embedding& emb,
                                  const NodeMetadata& meta,
                                  bool use_covariates) {
  if (!use_covariates || !meta.covariates) return emb.center;
  if (meta.covariates->rows() != emb.center.rows())
    throw std::invalid_argument("covariate rows do not match embedding rows");
  Eigen::MatrixXd out(emb.center.rows(),
                      emb.center.cols() + meta.covariates->cols());
  out << emb.center, *meta.covariates;
  return out;
}

}  // namespace netembed
