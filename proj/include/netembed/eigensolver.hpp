#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace netembed {

struct EigenPairs {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // matching columns, unit norm
};

enum class SolverChoice { automatic, dense, iterative };

// k algebraically smallest eigenpairs of the symmetric matrix
// a + deflate_shift * u u^T, where u is `deflate` normalized (pass nullptr
// for plain a). Shifting a known eigenvector past the wanted part of the
// spectrum is how the trivial Laplacian direction is excluded. `automatic`
// uses a dense solve up to n = 512 and Lanczos with full
// reorthogonalization above; the iterative path stops when every wanted
// Ritz residual is below tol and throws ConvergenceError if the matvec
// budget (10n) runs out first.
EigenPairs smallest_eigenpairs(const Eigen::SparseMatrix<double>& a, int k,
                               const Eigen::VectorXd* deflate = nullptr,
                               double deflate_shift = 0.0,
                               SolverChoice solver = SolverChoice::automatic,
                               double tol = 1e-8);

// k algebraically largest eigenpairs, descending order.
EigenPairs largest_eigenpairs(const Eigen::SparseMatrix<double>& a, int k,
                              SolverChoice solver = SolverChoice::automatic,
                              double tol = 1e-8);

// Deterministic orientation: flips each column so its first entry of
// magnitude > 1e-9 * max|column| is positive.
void apply_sign_convention(Eigen::Ref<Eigen::MatrixXd> m);

}  // namespace netembed
