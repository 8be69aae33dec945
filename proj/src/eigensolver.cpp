#include "netembed/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "netembed/errors.hpp"
#include "netembed/rng.hpp"

namespace netembed {

namespace {

constexpr std::size_t kDenseLimit = 512;

Eigen::VectorXd normalized_or_empty(const Eigen::VectorXd* v) {
  if (!v) return {};
  const double norm = v->norm();
  if (norm == 0.0) throw std::invalid_argument("deflation vector is zero");
  return *v / norm;
}

EigenPairs dense_smallest(const Eigen::SparseMatrix<double>& a, int k,
                          const Eigen::VectorXd& u, double shift) {
  Eigen::MatrixXd dense(a);
  if (u.size() > 0) dense += shift * u * u.transpose();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("dense symmetric eigensolver failed");
  EigenPairs out;
  out.values = solver.eigenvalues().head(k);
  out.vectors = solver.eigenvectors().leftCols(k);
  return out;
}

// Lanczos with full reorthogonalization; restarts with a fresh orthogonal
// start vector on breakdown so invariant subspaces (multiple eigenvalues)
// do not stall the iteration.
EigenPairs lanczos_smallest(const Eigen::SparseMatrix<double>& a, int k,
                            const Eigen::VectorXd& u, double shift,
                            double tol) {
  const Eigen::Index n = a.rows();
  const Eigen::Index max_basis = n;
  const long matvec_budget = 10L * static_cast<long>(n);

  auto apply = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd y = a * x;
    if (u.size() > 0) y += (shift * u.dot(x)) * u;
    return y;
  };

  Eigen::MatrixXd basis(n, std::min<Eigen::Index>(max_basis, 256));
  std::vector<double> alpha, beta;  // beta[j] links v_j and v_{j+1}

  auto reorthogonalize = [&](Eigen::VectorXd& w, Eigen::Index m) {
    for (int pass = 0; pass < 2; ++pass) {
      if (u.size() > 0) w -= u.dot(w) * u;
      if (m > 0)
        w -= basis.leftCols(m) * (basis.leftCols(m).transpose() * w);
    }
  };

  Rng rng(0x5eedf00dULL);  // fixed: the solver is deterministic
  auto fresh_vector = [&](Eigen::Index m) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.next_uniform(-1.0, 1.0);
    reorthogonalize(v, m);
    const double norm = v.norm();
    if (norm < 1e-12)
      throw ConvergenceError("lanczos could not extend the basis");
    return Eigen::VectorXd(v / norm);
  };

  Eigen::VectorXd v = fresh_vector(0);
  basis.col(0) = v;
  Eigen::Index m = 1;
  Eigen::VectorXd v_prev = Eigen::VectorXd::Zero(n);
  double beta_prev = 0.0;
  long matvecs = 0;

  EigenPairs ritz;
  auto converged = [&]() {
    if (m < k) return false;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const double tail = m == static_cast<Eigen::Index>(beta.size())
                            ? std::abs(beta.back())
                            : 0.0;
    for (int i = 0; i < k; ++i) {
      const double resid = tail * std::abs(es.eigenvectors()(m - 1, i));
      if (resid > tol * std::max(1.0, std::abs(es.eigenvalues()[i])))
        return false;
    }
    ritz.values = es.eigenvalues().head(k);
    ritz.vectors = basis.leftCols(m) * es.eigenvectors().leftCols(k);
    for (int i = 0; i < k; ++i) ritz.vectors.col(i).normalize();
    return true;
  };

  while (true) {
    Eigen::VectorXd w = apply(v);
    ++matvecs;
    const double a_j = v.dot(w);
    alpha.push_back(a_j);
    w -= a_j * v + beta_prev * v_prev;
    reorthogonalize(w, m);
    double b_j = w.norm();

    const bool check_now = (m >= 2 * k && m % 8 == 0) || m == max_basis;
    if (b_j < 1e-10) {
      // Invariant subspace; everything in it is exact. Extend with a fresh
      // direction unless the basis is complete.
      beta.push_back(0.0);
      if (converged()) return ritz;
      if (m == max_basis)
        throw ConvergenceError("lanczos exhausted the full space unconverged");
      v_prev = Eigen::VectorXd::Zero(n);
      beta_prev = 0.0;
      v = fresh_vector(m);
    } else {
      beta.push_back(b_j);
      v_prev = v;
      beta_prev = b_j;
      v = w / b_j;
      if (check_now && converged()) return ritz;
      if (m == max_basis)
        throw ConvergenceError("lanczos basis limit reached unconverged");
    }
    if (matvecs > matvec_budget)
      throw ConvergenceError("lanczos matvec budget (10n) exceeded");
    if (m == basis.cols())
      basis.conservativeResize(Eigen::NoChange,
                               std::min<Eigen::Index>(max_basis, 2 * m));
    basis.col(m) = v;
    ++m;
  }
}

}  // namespace

EigenPairs smallest_eigenpairs(const Eigen::SparseMatrix<double>& a, int k,
                               const Eigen::VectorXd* deflate,
                               double deflate_shift, SolverChoice solver,
                               double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix not square");
  if (k < 1 || k > a.rows())
    throw std::invalid_argument("eigenpair count out of range");
  const Eigen::VectorXd u = normalized_or_empty(deflate);
  const bool dense = solver == SolverChoice::dense ||
                     (solver == SolverChoice::automatic &&
                      static_cast<std::size_t>(a.rows()) <= kDenseLimit);
  return dense ? dense_smallest(a, k, u, deflate_shift)
               : lanczos_smallest(a, k, u, deflate_shift, tol);
}

EigenPairs largest_eigenpairs(const Eigen::SparseMatrix<double>& a, int k,
                              SolverChoice solver, double tol) {
  Eigen::SparseMatrix<double> neg = -a;
  EigenPairs out = smallest_eigenpairs(neg, k, nullptr, 0.0, solver, tol);
  out.values = -out.values;
  return out;
}

void apply_sign_convention(Eigen::Ref<Eigen::MatrixXd> m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const double cutoff = 1e-9 * m.col(c).cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > cutoff) {
        if (m(r, c) < 0.0) m.col(c) = -m.col(c);
        break;
      }
    }
  }
}

}  // namespace netembed
