#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "netembed/classifiers.hpp"

namespace netembed {

namespace {

int class_count_of(const std::vector<int>& y) {
  if (y.empty()) throw std::invalid_argument("empty label vector");
  int c = 0;
  for (const int v : y) {
    if (v < 0) throw std::invalid_argument("labels must be >= 0");
    c = std::max(c, v + 1);
  }
  return c;
}

// Row-wise softmax of logits, overflow-safe.
Eigen::MatrixXd softmax_rows(Eigen::MatrixXd logits) {
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double m = logits.row(i).maxCoeff();
    logits.row(i) = (logits.row(i).array() - m).exp();
    logits.row(i) /= logits.row(i).sum();
  }
  return logits;
}

}  // namespace

double logistic_objective(const Eigen::MatrixXd& x, const std::vector<int>& y,
                          const Eigen::MatrixXd& weights,
                          const Eigen::VectorXd& bias, double l2,
                          Eigen::MatrixXd* grad_w, Eigen::VectorXd* grad_b) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXd logits = x * weights.transpose();
  logits.rowwise() += bias.transpose();
  const Eigen::MatrixXd probs = softmax_rows(std::move(logits));

  double obj = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    obj -= std::log(std::max(probs(i, y[i]), 1e-300));
  obj += 0.5 * l2 * weights.squaredNorm();

  if (grad_w || grad_b) {
    Eigen::MatrixXd delta = probs;  // P - Y
    for (Eigen::Index i = 0; i < n; ++i) delta(i, y[i]) -= 1.0;
    if (grad_w) *grad_w = delta.transpose() * x + l2 * weights;
    if (grad_b) *grad_b = delta.colwise().sum().transpose();
  }
  return obj;
}

LogisticModel fit_logistic(const Eigen::MatrixXd& x, const std::vector<int>& y,
                           double l2, int max_iter, double tol) {
  if (static_cast<std::size_t>(x.rows()) != y.size())
    throw std::invalid_argument("feature/label row mismatch");
  if (!x.allFinite()) throw std::invalid_argument("non-finite features");
  const int classes = class_count_of(y);
  if (std::count(y.begin(), y.end(), y[0]) == static_cast<long>(y.size()))
    throw std::invalid_argument("single-class input");

  LogisticModel model;
  model.weights = Eigen::MatrixXd::Zero(classes, x.cols());
  model.bias = Eigen::VectorXd::Zero(classes);

  double obj = logistic_objective(x, y, model.weights, model.bias, l2);
  model.objective_trace.push_back(obj);
  double step = 1.0 / static_cast<double>(x.rows());
  constexpr double kArmijo = 1e-4;

  for (int it = 0; it < max_iter; ++it) {
    Eigen::MatrixXd gw;
    Eigen::VectorXd gb;
    logistic_objective(x, y, model.weights, model.bias, l2, &gw, &gb);
    const double ginf =
        std::max(gw.cwiseAbs().maxCoeff(), gb.cwiseAbs().maxCoeff());
    if (ginf < tol) {
      model.converged = true;
      break;
    }
    const double gsq = gw.squaredNorm() + gb.squaredNorm();
    bool accepted = false;
    for (int halvings = 0; halvings < 60; ++halvings) {
      const Eigen::MatrixXd w_new = model.weights - step * gw;
      const Eigen::VectorXd b_new = model.bias - step * gb;
      const double obj_new = logistic_objective(x, y, w_new, b_new, l2);
      if (obj_new <= obj - kArmijo * step * gsq) {
        model.weights = w_new;
        model.bias = b_new;
        obj = obj_new;
        model.objective_trace.push_back(obj);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    step *= 2.0;
  }
  return model;
}

Eigen::MatrixXd logistic_probabilities(const LogisticModel& model,
                                       const Eigen::MatrixXd& x) {
  if (x.cols() != model.weights.cols())
    throw std::invalid_argument("feature width mismatch");
  Eigen::MatrixXd logits = x * model.weights.transpose();
  logits.rowwise() += model.bias.transpose();
  return softmax_rows(std::move(logits));
}

std::vector<int> predict_labels(const Eigen::MatrixXd& probabilities) {
  std::vector<int> labels(probabilities.rows());
  for (Eigen::Index i = 0; i < probabilities.rows(); ++i) {
    int best = 0;
    for (Eigen::Index c = 1; c < probabilities.cols(); ++c)
      if (probabilities(i, c) > probabilities(i, best)) best = static_cast<int>(c);
    labels[i] = best;
  }
  return labels;
}

}  // namespace netembed
