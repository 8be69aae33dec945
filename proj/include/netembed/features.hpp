#pragma once

#include <vector>

#include <Eigen/Core>

#include "netembed/embedding.hpp"
#include "netembed/graph.hpp"

namespace netembed {

// Per-column standardization fit on training rows only (the leakage
// contract: test rows never touch the fitted parameters). Constant columns
// get scale 1 so they map to zero.
class Standardizer {
 public:
  void fit(const Eigen::MatrixXd& x, const std::vector<int>& rows);
  Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const;

  const Eigen::RowVectorXd& mean() const { return mean_; }
  const Eigen::RowVectorXd& scale() const { return scale_; }

 private:
  Eigen::RowVectorXd mean_;
  Eigen::RowVectorXd scale_;
};

// Downstream feature block: embedding columns, optionally concatenated with
// node covariates.
Eigen::MatrixXd assemble_features(const Embedding& emb,
                                  const NodeMetadata& meta,
                                  bool use_covariates);

}  // namespace netembed
