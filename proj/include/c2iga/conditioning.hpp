#pragma once

#include <functional>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace c2iga {

/// D^{-1/2} M D^{-1/2} with D = diag(M); throws on a nonpositive diagonal.
Eigen::SparseMatrix<double> diagonally_scaled(const Eigen::SparseMatrix<double>& M);

/// lambda_max / lambda_min of the diagonally scaled matrix by a dense
/// symmetric eigensolve.
double scaled_condition_dense(const Eigen::SparseMatrix<double>& M);

/// Same quantity from Lanczos iterations on A and on A^{-1} (sparse LDL^T),
/// stopped when both extreme Ritz values are converged to `rel_tol`.
double scaled_condition_lanczos(const Eigen::SparseMatrix<double>& M,
                                double rel_tol = 1e-6);

/// Dense up to `dense_limit` rows, Lanczos beyond.
double scaled_condition_number(const Eigen::SparseMatrix<double>& M,
                               int dense_limit = 6000);

/// Largest eigenvalue of a symmetric positive operator by Lanczos with full
/// reorthogonalization and a fixed start vector.
double lanczos_max_eigenvalue(
    const std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>& apply,
    int n, double rel_tol, int max_iter = 400);

}  // namespace c2iga
