#include "c2iga/conditioning.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <lapacke.h>

namespace c2iga {

Eigen::SparseMatrix<double> diagonally_scaled(const Eigen::SparseMatrix<double>& M) {
  const Eigen::VectorXd d = M.diagonal();
  if ((d.array() <= 0.0).any()) {
    throw std::invalid_argument("mass matrix has a nonpositive diagonal entry");
  }
  const Eigen::VectorXd s = d.array().rsqrt();
  return s.asDiagonal() * M * s.asDiagonal();
}

double scaled_condition_dense(const Eigen::SparseMatrix<double>& M) {
  const Eigen::SparseMatrix<double> A = diagonally_scaled(M);
  const int n = static_cast<int>(A.rows());
  Eigen::MatrixXd dense = Eigen::MatrixXd(A);
  std::vector<double> w(n);
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', n,
                                         dense.data(), n, w.data());
  if (info != 0) throw std::runtime_error("dense eigensolver failed");
  if (w.front() <= 0.0) {
    throw std::runtime_error("scaled mass matrix is not positive definite");
  }
  return w.back() / w.front();
}

double lanczos_max_eigenvalue(
    const std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>& apply,
    int n, double rel_tol, int max_iter) {
  const int m_max = std::min(max_iter, n);
  Eigen::MatrixXd Q(n, m_max + 1);
  std::vector<double> alpha, beta;
  Eigen::VectorXd q(n);
  // Fixed, non-symmetric start vector.
  for (int i = 0; i < n; ++i) q(i) = 1.0 + 0.5 * std::sin(1.0 + 0.37 * i);
  q.normalize();
  Q.col(0) = q;
  Eigen::VectorXd w(n);
  for (int j = 0; j < m_max; ++j) {
    apply(Q.col(j), w);
    const double a = Q.col(j).dot(w);
    alpha.push_back(a);
    // Full reorthogonalization, twice for safety.
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXd h = Q.leftCols(j + 1).transpose() * w;
      w -= Q.leftCols(j + 1) * h;
    }
    const double b = w.norm();
    const int m = j + 1;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    const double theta = es.eigenvalues()(m - 1);
    const double resid = std::abs(b * es.eigenvectors()(m - 1, m - 1));
    // The Ritz value error is bounded by the residual norm.
    if (resid <= rel_tol * std::abs(theta) || b <= 1e-14 * std::abs(theta)) {
      return theta;
    }
    beta.push_back(b);
    Q.col(j + 1) = w / b;
  }
  throw std::runtime_error("Lanczos iteration did not converge");
}

double scaled_condition_lanczos(const Eigen::SparseMatrix<double>& M,
                                double rel_tol) {
  const Eigen::SparseMatrix<double> A = diagonally_scaled(M);
  const int n = static_cast<int>(A.rows());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
  if (ldlt.info() != Eigen::Success || (ldlt.vectorD().array() <= 0.0).any()) {
    throw std::runtime_error("scaled mass matrix is not positive definite");
  }
  const double lmax = lanczos_max_eigenvalue(
      [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = A * x; }, n,
      rel_tol);
  const double inv_lmin = lanczos_max_eigenvalue(
      [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = ldlt.solve(x); },
      n, rel_tol);
  return lmax * inv_lmin;
}

double scaled_condition_number(const Eigen::SparseMatrix<double>& M,
                               int dense_limit) {
  return M.rows() <= dense_limit ? scaled_condition_dense(M)
                                 : scaled_condition_lanczos(M);
}

}  // namespace c2iga
