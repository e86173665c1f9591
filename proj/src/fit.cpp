#include "c2iga/fit.hpp"

#include "c2iga/basis.hpp"
#include "c2iga/projection.hpp"

namespace c2iga {

namespace {

// Both patches the identity map of the unit square: |det J| = 1.
TwoPatchGeometry unit_squares() {
  SplineSpace bilinear(KnotVector(1, {0.0, 0.0, 1.0, 1.0}));
  TwoPatchGeometry::ControlGrid g{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return TwoPatchGeometry(bilinear, 0, g, g);
}

}  // namespace

FitResult fit_bilinear_like(const TwoPatchGeometry& initial,
                            const TwoPatchGeometry& fhat, FitWeight weight,
                            int degree, int regularity, int quad_points) {
  const GluingData g = gluing_from_bilinear(fhat);
  const KnotVector knots = KnotVector::uniform(degree, regularity, 0);
  const SmoothBasis basis = build_basis_v2(
      g, gluing_invariants(g, knots, regularity), knots, regularity);
  const CoefficientMatrix C = coefficient_matrix(basis, true);
  const SplineSpace space(knots);
  const QuadratureRule rule =
      gauss_rule(quad_points > 0 ? quad_points : degree + 1, space.spans());
  const TwoPatchGeometry weight_geom =
      weight == FitWeight::ReferenceJacobian ? fhat
      : weight == FitWeight::InitialJacobian ? initial
                                             : unit_squares();

  std::array<ProjectionResult, 2> coord;
  for (int c = 0; c < 2; ++c) {
    const PointFunction f = [&initial, c](Side s, double u, double v,
                                          const Eigen::Vector2d&) {
      return initial.point(s, u, v)(c);
    };
    coord[c] = l2_project(weight_geom, space, C, f, rule);
  }
  const int n = space.dim();
  std::array<TwoPatchGeometry::ControlGrid, 2> grids;
  for (Side s : kSides) {
    auto& grid = grids[static_cast<int>(s)];
    grid.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) {
      grid[i] = {coord[0].patch_coeffs[static_cast<int>(s)][i],
                 coord[1].patch_coeffs[static_cast<int>(s)][i]};
    }
  }
  TwoPatchGeometry fitted(space, regularity, grids[0], grids[1]);
  const double eps = discrete_relative_error(initial, fitted);
  return FitResult{std::move(fitted), g, eps,
                   {coord[0].coeffs, coord[1].coeffs}};
}

double discrete_relative_error(const TwoPatchGeometry& reference,
                               const TwoPatchGeometry& approx) {
  double num = 0.0, den = 0.0;
  for (Side s : kSides) {
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const Eigen::Vector2d a = reference.point(s, i / 10.0, j / 10.0);
        const Eigen::Vector2d b = approx.point(s, i / 10.0, j / 10.0);
        num += (a - b).squaredNorm();
        den += a.squaredNorm();
      }
    }
  }
  return num / den;
}

}  // namespace c2iga
