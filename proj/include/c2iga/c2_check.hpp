#pragma once

#include <span>

#include "c2iga/geometry.hpp"

namespace c2iga {

struct C2Report {
  double value = 0.0;     // |phi^L - phi^R| relative
  double gradient = 0.0;  // |grad phi^L - grad phi^R| relative
  double hessian = 0.0;   // Frobenius norm of the Hessian difference, relative
  bool passed = false;
};

/// Compares phi, its physical gradient and Hessian computed from both sides
/// at `n_samples` points of the interface. Coefficient grids are n x n,
/// i-major, over the geometry's tensor space. Each discrepancy is divided by
/// the largest magnitude of that quantity seen on the interface (absolute
/// if the function vanishes there). Throws on a singular Jacobian.
C2Report verify_c2_at_interface(const TwoPatchGeometry& f,
                                std::span<const double> coeffs_L,
                                std::span<const double> coeffs_R,
                                int n_samples, double tol);

}  // namespace c2iga
