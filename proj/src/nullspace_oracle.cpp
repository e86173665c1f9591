#include "c2iga/nullspace_oracle.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace c2iga {

NullspaceReport constraint_nullspace(const GluingData& g, const KnotVector& base,
                                     double zero_tol, double min_gap) {
  const SplineSpace space(base);
  const int p = base.degree();
  const int n = space.dim();
  const int spans = static_cast<int>(space.spans().size());
  const int per_span = 4 * (p + 1);

  // Derivatives at u = 0 of the first three B-splines in u.
  const BasisValues at0 = space.eval_basis(0.0, 2);
  double du[3][3];  // du[d][i] = N_i^{(d)}(0)
  for (int d = 0; d < 3; ++d)
    for (int i = 0; i < 3; ++i) du[d][i] = at0(d, i);

  const Polynomial& aL = g.alpha_L;
  const Polynomial& aR = g.alpha_R;
  const Polynomial beta = beta_from_gluing(g);
  const Polynomial eta = 2.0 * aL.derivative() * aR * beta;
  const Polynomial theta =
      2.0 * (aL * g.beta_L.derivative() - aL.derivative() * g.beta_L) * aR * beta;

  // Unknown layout: side s, column i, index j -> s * 3n + i * n + j.
  const int cols = 6 * n;
  const int pts = spans * per_span;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3 * pts, cols);
  int row = 0;
  for (const auto& [a, b] : space.spans()) {
    for (int m = 0; m < per_span; ++m) {
      const double v = a + (m + 0.5) / per_span * (b - a);
      const BasisValues bv = space.eval_basis(v, 2);
      const double al = aL(v), ar = aR(v), bt = beta(v);
      const double et = eta(v), th = theta(v);
      auto col = [&](int s, int i, int l) { return s * 3 * n + i * n + bv.first + l; };
      for (int l = 0; l < bv.order; ++l) {
        const double N = bv(0, l), N1 = bv(1, l), N2 = bv(2, l);
        // (8): g^L(0,v) - g^R(0,v)
        for (int i = 0; i < 3; ++i) {
          A(row, col(0, i, l)) += du[0][i] * N;
          A(row, col(1, i, l)) -= du[0][i] * N;
        }
        // (9): aR D_u g^L - aL D_u g^R + beta D_v g^L
        for (int i = 0; i < 3; ++i) {
          A(row + 1, col(0, i, l)) += ar * du[1][i] * N + bt * du[0][i] * N1;
          A(row + 1, col(1, i, l)) -= al * du[1][i] * N;
        }
        // (10): aL w + eta D_u g^L + theta D_v g^L with
        // w = aL^2 D_uu g^R - (aR^2 D_uu g^L + 2 aR beta D_uv g^L + beta^2 D_vv g^L)
        for (int i = 0; i < 3; ++i) {
          A(row + 2, col(1, i, l)) += al * al * al * du[2][i] * N;
          A(row + 2, col(0, i, l)) +=
              -al * (ar * ar * du[2][i] * N + 2.0 * ar * bt * du[1][i] * N1 +
                     bt * bt * du[0][i] * N2) +
              et * du[1][i] * N + th * du[0][i] * N1;
        }
      }
      row += 3;
    }
  }
  // Rows and columns scale like powers of k + 1; equilibrate both, which
  // leaves the nullspace dimension unchanged.
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (int r = 0; r < A.rows(); ++r) {
      const double nr = A.row(r).norm();
      if (nr > 0.0) A.row(r) /= nr;
    }
    for (int c = 0; c < A.cols(); ++c) {
      const double nc = A.col(c).norm();
      if (nc > 0.0) A.col(c) /= nc;
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  const Eigen::VectorXd sv = svd.singularValues();
  NullspaceReport rep;
  rep.rows = static_cast<int>(A.rows());
  rep.cols = cols;
  const double smax = sv.size() ? sv(0) : 0.0;
  // Columns beyond the row count contribute zero singular values.
  std::vector<double> all(cols, 0.0);
  for (int i = 0; i < sv.size() && i < cols; ++i) all[i] = sv(i) / smax;
  rep.singular_values = all;
  int rank = 0;
  while (rank < cols && all[rank] > zero_tol) ++rank;
  rep.dimension = cols - rank;
  const double kept = rank > 0 ? all[rank - 1] : 0.0;
  const double dropped = rank < cols ? all[rank] : 0.0;
  rep.gap = dropped > 0.0 ? kept / dropped
                          : std::numeric_limits<double>::infinity();
  rep.determinate = rep.gap >= min_gap;
  return rep;
}

int constraint_nullspace_dim(const GluingData& g, const KnotVector& base) {
  const NullspaceReport rep = constraint_nullspace(g, base);
  if (!rep.determinate) {
    throw IndeterminateRank("singular-value gap " + std::to_string(rep.gap) +
                            " too small to decide the rank");
  }
  return rep.dimension;
}

}  // namespace c2iga
