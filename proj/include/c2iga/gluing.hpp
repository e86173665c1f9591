#pragma once

#include <vector>

#include "c2iga/bspline.hpp"
#include "c2iga/geometry.hpp"
#include "c2iga/polynomial.hpp"

namespace c2iga {

/// Linear gluing functions alpha^(S), beta^(S) of a two-patch geometry.
struct GluingData {
  Polynomial alpha_L, alpha_R, beta_L, beta_R;

  const Polynomial& alpha(Side s) const {
    return s == Side::Left ? alpha_L : alpha_R;
  }
  const Polynomial& beta(Side s) const {
    return s == Side::Left ? beta_L : beta_R;
  }
};

/// beta = alpha_L beta_R - alpha_R beta_L.
Polynomial beta_from_gluing(const GluingData& g);

/// alpha_L * alpha_R < 0 on all of [0,1].
bool verify_sign_condition(const GluingData& g);

/// Gluing data of a bilinear two-patch geometry: alpha^(S) is
/// det[D_u F^(S)(0,v), F_0'(v)] and beta^(S) the projection of D_u F^(S)
/// onto the interface tangent. Throws if the patches are not bilinear, the
/// results are not linear, or the sign condition fails.
GluingData gluing_from_bilinear(const TwoPatchGeometry& fhat);

enum class TildeBranch { BetaZero, NoRoots, OneRoot, TwoRoots };
const char* branch_name(TildeBranch b);

/// Per-knot regularity pattern of the knot vector used for traces; can be
/// instantiated at any degree large enough.
struct KnotPattern {
  std::vector<double> interior;
  std::vector<int> regularity;  // one entry per interior knot

  KnotVector build(int degree) const;
};

struct GluingInvariants {
  Polynomial q, h, atilde_L, atilde_R, beta;
  int d_alpha = 0, d_atilde = 0, d_h = 0;
  std::vector<int> z_beta_set;  // 1-based interior knot indices
  int z_beta = 0;
  bool beta_zero = false;
  TildeBranch branch = TildeBranch::NoRoots;
  KnotPattern ttilde;

  const Polynomial& atilde(Side s) const {
    return s == Side::Left ? atilde_L : atilde_R;
  }
};

/// Regularity r of a knot vector with uniform interior multiplicity p - r.
/// With no interior knots any r is consistent; `fallback` is returned.
int uniform_regularity(const KnotVector& kv, int fallback);

/// Derived quantities of the gluing data relative to base = T_k^{p,r}.
GluingInvariants gluing_invariants(const GluingData& g, const KnotVector& base,
                                   int regularity);

struct BilinearLikeReport {
  double interface = 0.0;    // (15), relative to the domain diameter
  double first_order = 0.0;  // (16), relative to its term magnitudes
  double second_order = 0.0; // (17), relative to its term magnitudes
  double worst_v = 0.0;      // sample with the largest residual
  bool passed = false;
};

BilinearLikeReport verify_bilinear_like(const TwoPatchGeometry& f,
                                        const GluingData& g, int n_samples,
                                        double tol);

}  // namespace c2iga
