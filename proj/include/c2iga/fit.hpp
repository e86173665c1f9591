#pragma once

#include <array>

#include <Eigen/Core>

#include "c2iga/geometry.hpp"
#include "c2iga/gluing.hpp"

namespace c2iga {

/// Weight of the coordinate fit: |det J| of the bilinear reference, |det J|
/// of the initial geometry, or the plain parameter-square integral.
enum class FitWeight { ReferenceJacobian, InitialJacobian, Parametric };

struct FitResult {
  TwoPatchGeometry fitted;
  GluingData gluing;
  double epsilon = 0.0;
  /// Coefficients of the x and y coordinates in the fitting basis.
  std::array<Eigen::VectorXd, 2> coord_coeffs;
};

/// L2-fit of both coordinate functions of `initial` in the C^2 space of
/// degree `degree`, regularity `regularity` and no interior knots built on
/// the bilinear reference `fhat`.
FitResult fit_bilinear_like(const TwoPatchGeometry& initial,
                            const TwoPatchGeometry& fhat,
                            FitWeight weight = FitWeight::ReferenceJacobian,
                            int degree = 5, int regularity = 2,
                            int quad_points = 0);

/// Ratio of squared point distances to squared point norms on the 11 x 11
/// parameter grid of both patches.
double discrete_relative_error(const TwoPatchGeometry& reference,
                               const TwoPatchGeometry& approx);

}  // namespace c2iga
