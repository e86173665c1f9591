#include "c2iga/projection.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SparseCholesky>

namespace c2iga {

namespace {

Eigen::SparseMatrix<double> side_block(const CoefficientMatrix& C, Side s,
                                       long nn) {
  return C.middleCols(s == Side::Left ? 0 : nn, nn);
}

}  // namespace

Eigen::SparseMatrix<double> assemble_mass(const TwoPatchGeometry& geom,
                                          const SplineSpace& space,
                                          const CoefficientMatrix& C,
                                          const QuadratureRule& rule,
                                          Backend backend) {
  const long nn = static_cast<long>(space.dim()) * space.dim();
  if (C.cols() != 2 * nn) {
    throw std::invalid_argument("coefficient matrix does not match the space");
  }
  Eigen::SparseMatrix<double> M(C.rows(), C.rows());
  for (Side s : kSides) {
    const Eigen::SparseMatrix<double> G =
        backend == Backend::Serial
            ? kernels_serial::tensor_gram(geom, s, space, rule)
            : kernels_omp::tensor_gram(geom, s, space, rule);
    const Eigen::SparseMatrix<double> Cs = side_block(C, s, nn);
    const Eigen::SparseMatrix<double> CG = Cs * G;
    M += Eigen::SparseMatrix<double>(CG * Cs.transpose());
  }
  return M;
}

Eigen::VectorXd assemble_load(const TwoPatchGeometry& geom,
                              const SplineSpace& space,
                              const CoefficientMatrix& C,
                              const PointFunction& f,
                              const QuadratureRule& rule, Backend backend) {
  const long nn = static_cast<long>(space.dim()) * space.dim();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(C.rows());
  for (Side s : kSides) {
    const Eigen::VectorXd bs =
        backend == Backend::Serial
            ? kernels_serial::tensor_load(geom, s, space, f, rule)
            : kernels_omp::tensor_load(geom, s, space, f, rule);
    b += side_block(C, s, nn) * bs;
  }
  return b;
}

double relative_l2_error(const TwoPatchGeometry& geom, const SplineSpace& space,
                         const std::array<std::vector<double>, 2>& patch_coeffs,
                         const PointFunction& f, const QuadratureRule& rule,
                         Backend backend) {
  double err = 0.0, norm = 0.0;
  for (Side s : kSides) {
    const auto& c = patch_coeffs[static_cast<int>(s)];
    const auto [e, nf] =
        backend == Backend::Serial
            ? kernels_serial::squared_error(geom, s, space, c, f, rule)
            : kernels_omp::squared_error(geom, s, space, c, f, rule);
    err += e;
    norm += nf;
  }
  return std::sqrt(err / norm);
}

ProjectionResult l2_project(const TwoPatchGeometry& geom,
                            const SplineSpace& space,
                            const CoefficientMatrix& C, const PointFunction& f,
                            const QuadratureRule& rule, Backend backend) {
  ProjectionResult res;
  res.mass = assemble_mass(geom, space, C, rule, backend);
  res.load = assemble_load(geom, space, C, f, rule, backend);
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(res.mass);
  if (ldlt.info() != Eigen::Success || (ldlt.vectorD().array() <= 0.0).any()) {
    throw std::runtime_error("mass matrix is not positive definite");
  }
  res.coeffs = ldlt.solve(res.load);
  const long nn = static_cast<long>(space.dim()) * space.dim();
  const Eigen::VectorXd all = C.transpose() * res.coeffs;
  for (Side s : kSides) {
    const long off = s == Side::Left ? 0 : nn;
    res.patch_coeffs[static_cast<int>(s)].assign(all.data() + off,
                                                 all.data() + off + nn);
  }
  res.rel_error =
      relative_l2_error(geom, space, res.patch_coeffs, f, rule, backend);
  return res;
}

}  // namespace c2iga
