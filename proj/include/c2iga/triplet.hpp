#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "c2iga/bspline.hpp"
#include "c2iga/gluing.hpp"
#include "c2iga/polynomial.hpp"

namespace c2iga {

/// factor(v) * spline^(deriv)(v).
struct TraceTerm {
  Polynomial factor;
  SplineFunction spline;
  int deriv = 0;
};

/// Sum of polynomial-weighted spline derivatives; empty means zero.
class TraceFunction {
 public:
  TraceFunction() = default;
  static TraceFunction of(SplineFunction s) {
    return TraceFunction({TraceTerm{Polynomial::constant(1.0), std::move(s), 0}});
  }
  explicit TraceFunction(std::vector<TraceTerm> terms)
      : terms_(std::move(terms)) {}

  bool is_zero() const { return terms_.empty(); }
  const std::vector<TraceTerm>& terms() const { return terms_; }

  /// Derivative of order d at v (d <= 2 in practice).
  double operator()(double v, int d = 0) const;

  /// Represent in `space` by Greville interpolation; throws if the function
  /// does not belong to the space up to `tol` (relative, sampled).
  SplineFunction represent_in(const SplineSpace& space, double tol = 1e-9) const;

 private:
  std::vector<TraceTerm> terms_;
};

enum class Family {
  Gamma0Regular,
  Gamma0Knot,
  Gamma0ZBeta,
  Gamma1Regular,
  Gamma1ZBeta,
  Gamma2,
  W0,
  W1,
  W2,
};
const char* family_name(Family f);
/// Trace level 0, 1 or 2 of a family (the block row of the coefficient matrix).
int family_level(Family f);
inline bool is_w_family(Family f) {
  return f == Family::W0 || f == Family::W1 || f == Family::W2;
}

/// (g0, g1, g2) for the subspace W families, (g~0, g~1, g~2) otherwise.
struct BasisTriplet {
  Family family;
  int j = 0;
  std::array<TraceFunction, 3> g;
};

/// M_0, M_1, M_2 on S(T_k^{p,r}) in u, with M_j^{(l)}(0) = delta_{jl}.
struct EdgeFunctions {
  explicit EdgeFunctions(const KnotVector& base);

  SplineSpace space;
  double tau1;
  SplineFunction M0, M1, M2;
  GrevilleInterpolator interp;
};

/// g^(S)(0,v), D_u g^(S)(0,v) and D_uu g^(S)(0,v) of the function defined by
/// a triplet, straight from the trace formulas.
std::array<double, 3> trace_values(const BasisTriplet& t, const GluingData& g,
                                   const GluingInvariants& inv, Side side,
                                   double v);

/// The three nonzero u-columns (rows of the result, each of length n) of
/// g^(S) in S(T_k^{p,r},[0,1]^2), by Greville collocation. Throws
/// std::runtime_error if a column target is not a spline of the space.
Eigen::MatrixXd surface_from_triplet(const BasisTriplet& t,
                                     const GluingData& g,
                                     const GluingInvariants& inv, Side side,
                                     const EdgeFunctions& ef,
                                     double tol = 1e-9);

}  // namespace c2iga
