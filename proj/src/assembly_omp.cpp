#include <cmath>
#include <vector>

#include "c2iga/assembly.hpp"

namespace c2iga::kernels_omp {

namespace {

// Univariate basis values at every quadrature node, computed once.
struct NodeTable {
  NodeTable(const SplineSpace& space, const QuadratureRule& rule)
      : order(space.degree() + 1) {
    const auto m = rule.nodes.size();
    first.resize(m);
    values.resize(m * order);
    for (std::size_t k = 0; k < m; ++k) {
      const BasisValues b = space.eval_basis(rule.nodes[k], 0);
      first[k] = b.first;
      for (int l = 0; l < order; ++l) values[k * order + l] = b(0, l);
    }
  }
  const double* at(int k) const { return &values[k * order]; }

  int order;
  std::vector<int> first;
  std::vector<double> values;
};

// Weighted geometry data of one cell: point, |det J| * w.
struct CellPoints {
  std::vector<Eigen::Vector2d> x;
  std::vector<double> w;
};

CellPoints cell_points(const TwoPatchGeometry& geom, Side s,
                       const QuadratureRule& rule, int cu, int cv) {
  const int q = rule.points_per_cell;
  CellPoints cp;
  cp.x.resize(q * q);
  cp.w.resize(q * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      const double u = rule.nodes[cu * q + a];
      const double v = rule.nodes[cv * q + b];
      const PatchJet j = geom.jet(s, u, v);
      cp.x[a * q + b] = j.x;
      cp.w[a * q + b] = rule.weights[cu * q + a] * rule.weights[cv * q + b] *
                        std::abs(j.det_jacobian());
    }
  }
  return cp;
}

}  // namespace

Eigen::SparseMatrix<double> tensor_gram(const TwoPatchGeometry& geom, Side s,
                                        const SplineSpace& space,
                                        const QuadratureRule& rule) {
  const int n = space.dim();
  const int q = rule.points_per_cell;
  const int o = space.degree() + 1;
  const int loc = o * o;
  const int nc = rule.num_cells();
  const NodeTable tab(space, rule);
  std::vector<std::vector<double>> blocks(static_cast<std::size_t>(nc) * nc);

#pragma omp parallel for schedule(dynamic)
  for (int cell = 0; cell < nc * nc; ++cell) {
    const int cu = cell / nc, cv = cell % nc;
    const CellPoints cp = cell_points(geom, s, rule, cu, cv);
    std::vector<double>& local = blocks[cell];
    local.assign(static_cast<std::size_t>(loc) * loc, 0.0);
    std::vector<double> phi(loc);
    for (int a = 0; a < q; ++a) {
      const double* Nu = tab.at(cu * q + a);
      for (int b = 0; b < q; ++b) {
        const double* Nv = tab.at(cv * q + b);
        const double w = cp.w[a * q + b];
        for (int i = 0; i < o; ++i)
          for (int j = 0; j < o; ++j) phi[i * o + j] = Nu[i] * Nv[j];
        for (int r = 0; r < loc; ++r) {
          const double wr = w * phi[r];
          double* row = &local[static_cast<std::size_t>(r) * loc];
          for (int c = 0; c < loc; ++c) row[c] += wr * phi[c];
        }
      }
    }
  }

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(nc) * nc * loc * loc);
  for (int cell = 0; cell < nc * nc; ++cell) {
    const int cu = cell / nc, cv = cell % nc;
    const int fu = tab.first[cu * q], fv = tab.first[cv * q];
    const auto& local = blocks[cell];
    for (int r = 0; r < loc; ++r) {
      const int gr = (fu + r / o) * n + fv + r % o;
      for (int c = 0; c < loc; ++c) {
        trip.emplace_back(gr, (fu + c / o) * n + fv + c % o,
                          local[static_cast<std::size_t>(r) * loc + c]);
      }
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
  const int nc = rule.num_cells();
  const NodeTable tab(space, rule);
  std::vector<std::vector<double>> blocks(static_cast<std::size_t>(nc) * nc);

#pragma omp parallel for schedule(dynamic)
  for (int cell = 0; cell < nc * nc; ++cell) {
    const int cu = cell / nc, cv = cell % nc;
    const CellPoints cp = cell_points(geom, s, rule, cu, cv);
    std::vector<double>& local = blocks[cell];
    local.assign(static_cast<std::size_t>(o) * o, 0.0);
    for (int a = 0; a < q; ++a) {
      const double* Nu = tab.at(cu * q + a);
      const double u = rule.nodes[cu * q + a];
      for (int b = 0; b < q; ++b) {
        const double* Nv = tab.at(cv * q + b);
        const double v = rule.nodes[cv * q + b];
        const double w = cp.w[a * q + b] * f(s, u, v, cp.x[a * q + b]);
        for (int i = 0; i < o; ++i)
          for (int j = 0; j < o; ++j) local[i * o + j] += w * Nu[i] * Nv[j];
      }
    }
  }

  Eigen::VectorXd load = Eigen::VectorXd::Zero(n * n);
  for (int cell = 0; cell < nc * nc; ++cell) {
    const int cu = cell / nc, cv = cell % nc;
    const int fu = tab.first[cu * q], fv = tab.first[cv * q];
    for (int i = 0; i < o; ++i)
      for (int j = 0; j < o; ++j)
        load((fu + i) * n + fv + j) += blocks[cell][i * o + j];
  }
  return load;
}

std::pair<double, double> squared_error(const TwoPatchGeometry& geom, Side s,
                                        const SplineSpace& space,
                                        std::span<const double> coeffs,
                                        const PointFunction& f,
                                        const QuadratureRule& rule) {
  const int n = space.dim();
  const int q = rule.points_per_cell;
  const int o = space.degree() + 1;
  const int nc = rule.num_cells();
  const NodeTable tab(space, rule);
  std::vector<double> err(static_cast<std::size_t>(nc) * nc);
  std::vector<double> norm(static_cast<std::size_t>(nc) * nc);

#pragma omp parallel for schedule(dynamic)
  for (int cell = 0; cell < nc * nc; ++cell) {
    const int cu = cell / nc, cv = cell % nc;
    const CellPoints cp = cell_points(geom, s, rule, cu, cv);
    double e = 0.0, nf = 0.0;
    for (int a = 0; a < q; ++a) {
      const double* Nu = tab.at(cu * q + a);
      const int fu = tab.first[cu * q + a];
      const double u = rule.nodes[cu * q + a];
      for (int b = 0; b < q; ++b) {
        const double* Nv = tab.at(cv * q + b);
        const int fv = tab.first[cv * q + b];
        const double v = rule.nodes[cv * q + b];
        double uh = 0.0;
        for (int i = 0; i < o; ++i) {
          double row = 0.0;
          for (int j = 0; j < o; ++j) row += coeffs[(fu + i) * n + fv + j] * Nv[j];
          uh += Nu[i] * row;
        }
        const double w = cp.w[a * q + b];
        const double fv_ = f(s, u, v, cp.x[a * q + b]);
        e += w * (uh - fv_) * (uh - fv_);
        nf += w * fv_ * fv_;
      }
    }
    err[cell] = e;
    norm[cell] = nf;
  }
  double e = 0.0, nf = 0.0;
  for (int cell = 0; cell < nc * nc; ++cell) {
    e += err[cell];
    nf += norm[cell];
  }
  return {e, nf};
}

}  // namespace c2iga::kernels_omp
