#include <cmath>
#include <vector>

#include "c2iga/assembly.hpp"

namespace c2iga::kernels_serial {

// Straightforward reference: every quadrature point evaluates the basis and
// the geometry from scratch, cells are visited in order on one thread.

Eigen::SparseMatrix<double> tensor_gram(const TwoPatchGeometry& geom, Side s,
                                        const SplineSpace& space,
                                        const QuadratureRule& rule) {
  const int n = space.dim();
  const int q = rule.points_per_cell;
  const int o = space.degree() + 1;
  std::vector<Eigen::Triplet<double>> trip;
  std::vector<double> local(static_cast<std::size_t>(o * o * o * o));
  for (int cu = 0; cu < rule.num_cells(); ++cu) {
    for (int cv = 0; cv < rule.num_cells(); ++cv) {
      std::fill(local.begin(), local.end(), 0.0);
      int fu = 0, fv = 0;
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
          const double u = rule.nodes[cu * q + a];
          const double v = rule.nodes[cv * q + b];
          const BasisValues bu = space.eval_basis(u, 0);
          const BasisValues bv = space.eval_basis(v, 0);
          fu = bu.first;
          fv = bv.first;
          const double w = rule.weights[cu * q + a] * rule.weights[cv * q + b] *
                           std::abs(geom.jet(s, u, v).det_jacobian());
          for (int i1 = 0; i1 < o; ++i1)
            for (int j1 = 0; j1 < o; ++j1)
              for (int i2 = 0; i2 < o; ++i2)
                for (int j2 = 0; j2 < o; ++j2)
                  local[((i1 * o + j1) * o + i2) * o + j2] +=
                      w * bu(0, i1) * bv(0, j1) * bu(0, i2) * bv(0, j2);
        }
      }
      for (int i1 = 0; i1 < o; ++i1)
        for (int j1 = 0; j1 < o; ++j1)
          for (int i2 = 0; i2 < o; ++i2)
            for (int j2 = 0; j2 < o; ++j2)
              trip.emplace_back((fu + i1) * n + fv + j1, (fu + i2) * n + fv + j2,
                                local[((i1 * o + j1) * o + i2) * o + j2]);
    }
  }
  Eigen::SparseMatrix<double> G(n * n, n * n);
  G.setFromTriplets(trip.begin(), trip.end());
  return G;
}

Eigen::VectorXd tensor_load(const TwoPatchGeometry& geom, Side s,
                            const SplineSpace& space, const PointFunction& f,
                            const QuadratureRule& rule) {
  const int n = space.dim();
  const int q = rule.points_per_cell;
  const int o = space.degree() + 1;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n * n);
  for (int cu = 0; cu < rule.num_cells(); ++cu) {
    for (int cv = 0; cv < rule.num_cells(); ++cv) {
      for (int a = 0; a < q; ++a) {
        for (int c = 0; c < q; ++c) {
          const double u = rule.nodes[cu * q + a];
          const double v = rule.nodes[cv * q + c];
          const BasisValues bu = space.eval_basis(u, 0);
          const BasisValues bv = space.eval_basis(v, 0);
          const PatchJet j = geom.jet(s, u, v);
          const double w = rule.weights[cu * q + a] * rule.weights[cv * q + c] *
                           std::abs(j.det_jacobian()) * f(s, u, v, j.x);
          for (int i1 = 0; i1 < o; ++i1)
            for (int j1 = 0; j1 < o; ++j1)
              b((bu.first + i1) * n + bv.first + j1) +=
                  w * bu(0, i1) * bv(0, j1);
        }
      }
    }
  }
  return b;
}

std::pair<double, double> squared_error(const TwoPatchGeometry& geom, Side s,
                                        const SplineSpace& space,
                                        std::span<const double> coeffs,
                                        const PointFunction& f,
                                        const QuadratureRule& rule) {
  const int q = rule.points_per_cell;
  double err = 0.0, norm = 0.0;
  for (int cu = 0; cu < rule.num_cells(); ++cu) {
    for (int cv = 0; cv < rule.num_cells(); ++cv) {
      for (int a = 0; a < q; ++a) {
        for (int c = 0; c < q; ++c) {
          const double u = rule.nodes[cu * q + a];
          const double v = rule.nodes[cv * q + c];
          const PatchJet j = geom.jet(s, u, v);
          const double w = rule.weights[cu * q + a] * rule.weights[cv * q + c] *
                           std::abs(j.det_jacobian());
          const double fv = f(s, u, v, j.x);
          const double uh = eval_tensor(space, coeffs, u, v);
          err += w * (uh - fv) * (uh - fv);
          norm += w * fv * fv;
        }
      }
    }
  }
  return {err, norm};
}

}  // namespace c2iga::kernels_serial
