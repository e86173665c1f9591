#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "c2iga/bspline.hpp"

namespace c2iga {

enum class Side { Left = 0, Right = 1 };
inline constexpr std::array<Side, 2> kSides{Side::Left, Side::Right};
inline const char* side_name(Side s) { return s == Side::Left ? "L" : "R"; }

/// Point and partial derivatives of a patch up to second order.
struct PatchJet {
  Eigen::Vector2d x, xu, xv, xuu, xuv, xvv;
  double det_jacobian() const { return xu.x() * xv.y() - xu.y() * xv.x(); }
};

/// Two tensor-product spline patches over the same space S(T,[0,1]^2)
/// sharing the u = 0 edge. Control points are stored i-major: index
/// i * n + j with i along u (i = 0 on the interface) and j along v.
class TwoPatchGeometry {
 public:
  using ControlGrid = std::vector<Eigen::Vector2d>;

  TwoPatchGeometry(SplineSpace space, int regularity, ControlGrid left,
                   ControlGrid right);

  const SplineSpace& space() const { return space_; }
  int degree() const { return space_.degree(); }
  int regularity() const { return regularity_; }
  int num_interior_knots() const { return space_.knots().num_interior(); }
  const ControlGrid& control(Side s) const {
    return s == Side::Left ? left_ : right_;
  }

  Eigen::Vector2d point(Side s, double u, double v) const;
  PatchJet jet(Side s, double u, double v) const;

  /// Diagonal of the control-point bounding box.
  double diameter() const;

  /// Max over sampled v of |F^L(0,v) - F^R(0,v)| divided by the diameter.
  double interface_mismatch(int samples = 101) const;

  /// Minimum over Gauss samples of |det J| / diameter^2 with the sign of
  /// the Jacobian required constant on each patch; returns 0 if a sign
  /// change is detected.
  double min_scaled_jacobian() const;

  /// Throws std::invalid_argument unless the interface agrees to 1e-10 and
  /// both patches are regular on the sample grid.
  void validate() const;

  /// Exact representation in a finer space by knot insertion.
  TwoPatchGeometry refined(const KnotVector& target, int regularity) const;

 private:
  SplineSpace space_;
  int regularity_;
  ControlGrid left_, right_;
};

/// Bilinear two-patch geometry interpolating the patch corners of `initial`.
TwoPatchGeometry bilinear_from_vertices(const TwoPatchGeometry& initial);

/// Gauss-Legendre nodes and weights on [0,1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace c2iga
