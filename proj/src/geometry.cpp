#include "c2iga/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace c2iga {

TwoPatchGeometry::TwoPatchGeometry(SplineSpace space, int regularity,
                                   ControlGrid left, ControlGrid right)
    : space_(std::move(space)),
      regularity_(regularity),
      left_(std::move(left)),
      right_(std::move(right)) {
  const auto n = static_cast<std::size_t>(space_.dim());
  if (left_.size() != n * n || right_.size() != n * n) {
    throw std::invalid_argument("control grid size does not match space");
  }
}

Eigen::Vector2d TwoPatchGeometry::point(Side s, double u, double v) const {
  const int n = space_.dim();
  const BasisValues bu = space_.eval_basis(u, 0);
  const BasisValues bv = space_.eval_basis(v, 0);
  const auto& c = control(s);
  Eigen::Vector2d x = Eigen::Vector2d::Zero();
  for (int a = 0; a < bu.order; ++a)
    for (int b = 0; b < bv.order; ++b)
      x += bu(0, a) * bv(0, b) * c[(bu.first + a) * n + bv.first + b];
  return x;
}

PatchJet TwoPatchGeometry::jet(Side s, double u, double v) const {
  const int n = space_.dim();
  const int nd = std::min(2, space_.degree());
  const BasisValues bu = space_.eval_basis(u, nd);
  const BasisValues bv = space_.eval_basis(v, nd);
  auto d = [&](const BasisValues& b, int k, int l) {
    return k <= nd ? b(k, l) : 0.0;
  };
  const auto& c = control(s);
  PatchJet j;
  j.x = j.xu = j.xv = j.xuu = j.xuv = j.xvv = Eigen::Vector2d::Zero();
  for (int a = 0; a < bu.order; ++a) {
    for (int b = 0; b < bv.order; ++b) {
      const Eigen::Vector2d& p = c[(bu.first + a) * n + bv.first + b];
      j.x += d(bu, 0, a) * d(bv, 0, b) * p;
      j.xu += d(bu, 1, a) * d(bv, 0, b) * p;
      j.xv += d(bu, 0, a) * d(bv, 1, b) * p;
      j.xuu += d(bu, 2, a) * d(bv, 0, b) * p;
      j.xuv += d(bu, 1, a) * d(bv, 1, b) * p;
      j.xvv += d(bu, 0, a) * d(bv, 2, b) * p;
    }
  }
  return j;
}

double TwoPatchGeometry::diameter() const {
  Eigen::Vector2d lo = left_.front(), hi = left_.front();
  for (const auto* grid : {&left_, &right_}) {
    for (const auto& p : *grid) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
  }
  return (hi - lo).norm();
}

double TwoPatchGeometry::interface_mismatch(int samples) const {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double v = double(i) / double(samples - 1);
    worst = std::max(worst, (point(Side::Left, 0.0, v) -
                             point(Side::Right, 0.0, v)).norm());
  }
  return worst / diameter();
}

double TwoPatchGeometry::min_scaled_jacobian() const {
  const int p = space_.degree();
  std::vector<double> nodes, weights;
  gauss_legendre(p + 1, nodes, weights);
  const auto spans = space_.spans();
  const double d2 = diameter() * diameter();
  double worst = INFINITY;
  for (Side s : kSides) {
    int sign = 0;
    for (const auto& [u0, u1] : spans)
      for (const auto& [v0, v1] : spans)
        for (double a : nodes)
          for (double b : nodes) {
            const double det =
                jet(s, u0 + a * (u1 - u0), v0 + b * (v1 - v0)).det_jacobian();
            const int sg = det > 0 ? 1 : (det < 0 ? -1 : 0);
            if (sg == 0 || (sign != 0 && sg != sign)) return 0.0;
            sign = sg;
            worst = std::min(worst, std::abs(det) / d2);
          }
  }
  return worst;
}

void TwoPatchGeometry::validate() const {
  if (interface_mismatch() > 1e-10) {
    throw std::invalid_argument("patches do not agree along the interface");
  }
  if (!(min_scaled_jacobian() > 0.0)) {
    throw std::invalid_argument("geometry mapping is not regular");
  }
}

TwoPatchGeometry TwoPatchGeometry::refined(const KnotVector& target,
                                           int regularity) const {
  const KnotVector& from = space_.knots();
  const int n = from.num_basis();
  const int m = target.num_basis();
  auto refine_grid = [&](const ControlGrid& grid) {
    // Along v: each row i is a curve with n points of dimension 2.
    std::vector<double> rows(static_cast<std::size_t>(n) * m * 2);
    for (int i = 0; i < n; ++i) {
      std::vector<double> c(2 * n);
      for (int j = 0; j < n; ++j) {
        c[2 * j] = grid[i * n + j].x();
        c[2 * j + 1] = grid[i * n + j].y();
      }
      const auto r = refine_coefficients(from, target, c, 2);
      std::copy(r.begin(), r.end(), rows.begin() + i * m * 2);
    }
    // Along u: treat row i as one block of 2m values.
    const auto all = refine_coefficients(from, target, rows, 2 * m);
    ControlGrid out(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        out[i * m + j] = {all[(i * m + j) * 2], all[(i * m + j) * 2 + 1]};
    return out;
  };
  return TwoPatchGeometry(SplineSpace(target), regularity, refine_grid(left_),
                          refine_grid(right_));
}

TwoPatchGeometry bilinear_from_vertices(const TwoPatchGeometry& initial) {
  const double tol = 1e-10 * initial.diameter();
  for (double v : {0.0, 1.0}) {
    if ((initial.point(Side::Left, 0.0, v) - initial.point(Side::Right, 0.0, v))
            .norm() > tol) {
      throw std::invalid_argument("patch corners do not match across interface");
    }
  }
  SplineSpace bilinear(KnotVector(1, {0.0, 0.0, 1.0, 1.0}));
  auto corners = [&](Side s) {
    TwoPatchGeometry::ControlGrid g(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g[i * 2 + j] = initial.point(s, i, j);
    return g;
  };
  return TwoPatchGeometry(bilinear, 0, corners(Side::Left),
                          corners(Side::Right));
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("Gauss rule needs at least one point");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    // Newton on the Legendre polynomial P_n from the usual cosine guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[n - 1 - i] = 0.5 * (x + 1.0);
    weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

}  // namespace c2iga
