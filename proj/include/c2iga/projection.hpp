#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "c2iga/assembly.hpp"

namespace c2iga {

enum class Backend { Serial, Parallel };

/// Basis functions as rows over the tensor B-splines of both patches
/// (column s * n^2 + i * n + j), see coefficient_matrix.
using CoefficientMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// m_ij = sum_S int g_i^(S) g_j^(S) |det J^(S)|.
Eigen::SparseMatrix<double> assemble_mass(const TwoPatchGeometry& geom,
                                          const SplineSpace& space,
                                          const CoefficientMatrix& C,
                                          const QuadratureRule& rule,
                                          Backend backend = Backend::Parallel);

/// f_i = sum_S int f g_i^(S) |det J^(S)|.
Eigen::VectorXd assemble_load(const TwoPatchGeometry& geom,
                              const SplineSpace& space,
                              const CoefficientMatrix& C,
                              const PointFunction& f,
                              const QuadratureRule& rule,
                              Backend backend = Backend::Parallel);

struct ProjectionResult {
  Eigen::VectorXd coeffs;  // b, one per basis function
  double rel_error = 0.0;  // ||u_h - f|| / ||f||
  Eigen::SparseMatrix<double> mass;
  Eigen::VectorXd load;
  /// u_h on each patch as an n x n tensor coefficient grid.
  std::array<std::vector<double>, 2> patch_coeffs;
};

/// Least-squares projection onto the span of the rows of C. Throws
/// std::runtime_error if the mass matrix is not positive definite.
ProjectionResult l2_project(const TwoPatchGeometry& geom,
                            const SplineSpace& space,
                            const CoefficientMatrix& C, const PointFunction& f,
                            const QuadratureRule& rule,
                            Backend backend = Backend::Parallel);

/// Relative L2 error of the function with the given patch grids.
double relative_l2_error(const TwoPatchGeometry& geom, const SplineSpace& space,
                         const std::array<std::vector<double>, 2>& patch_coeffs,
                         const PointFunction& f, const QuadratureRule& rule,
                         Backend backend = Backend::Parallel);

}  // namespace c2iga
