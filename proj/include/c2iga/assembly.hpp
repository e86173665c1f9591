#pragma once

#include <functional>
#include <span>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "c2iga/bspline.hpp"
#include "c2iga/geometry.hpp"
#include "c2iga/quadrature.hpp"

namespace c2iga {

/// Scalar data evaluated at a quadrature point: patch, parameters and the
/// physical point F^(S)(u,v).
using PointFunction =
    std::function<double(Side, double u, double v, const Eigen::Vector2d& x)>;

/// Quadrature kernels over one patch for the tensor B-splines N_{i,j} of
/// `space` (index i * n + j), weighted by |det J| of `geom`. The geometry
/// may live in any spline space. The rule is applied in both directions.
namespace kernels_serial {
Eigen::SparseMatrix<double> tensor_gram(const TwoPatchGeometry& geom, Side s,
                                        const SplineSpace& space,
                                        const QuadratureRule& rule);
Eigen::VectorXd tensor_load(const TwoPatchGeometry& geom, Side s,
                            const SplineSpace& space, const PointFunction& f,
                            const QuadratureRule& rule);
/// Returns (integral of (u_h - f)^2, integral of f^2), u_h = sum c_ij N_ij.
std::pair<double, double> squared_error(const TwoPatchGeometry& geom, Side s,
                                        const SplineSpace& space,
                                        std::span<const double> coeffs,
                                        const PointFunction& f,
                                        const QuadratureRule& rule);
}  // namespace kernels_serial

/// Same kernels with OpenMP over cells; each cell writes its own buffer and
/// buffers are merged in cell order, so results do not depend on the
/// thread count.
namespace kernels_omp {
Eigen::SparseMatrix<double> tensor_gram(const TwoPatchGeometry& geom, Side s,
                                        const SplineSpace& space,
                                        const QuadratureRule& rule);
Eigen::VectorXd tensor_load(const TwoPatchGeometry& geom, Side s,
                            const SplineSpace& space, const PointFunction& f,
                            const QuadratureRule& rule);
std::pair<double, double> squared_error(const TwoPatchGeometry& geom, Side s,
                                        const SplineSpace& space,
                                        std::span<const double> coeffs,
                                        const PointFunction& f,
                                        const QuadratureRule& rule);
}  // namespace kernels_omp

}  // namespace c2iga
