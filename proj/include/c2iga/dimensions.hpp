#pragma once

#include "c2iga/gluing.hpp"

namespace c2iga {

struct GammaDims {
  int gamma0 = 0, gamma1 = 0, gamma2 = 0;
  int total() const { return gamma0 + gamma1 + gamma2; }
};

/// Dimension of S(T_k^{p,r}) on [0,1].
inline int spline_dim(int p, int r, int k) { return p + 1 + k * (p - r); }

/// Interior part V_1^2 (functions with no interface coefficients).
int dim_v1(int p, int r, int k);

/// Dimensions of the trace spaces of the interface part.
GammaDims dim_gamma(const GluingInvariants& inv, int p, int r, int k);

/// Closed form of dim V_2^2; throws std::logic_error if it disagrees with
/// the sum of dim_gamma.
int dim_v2(const GluingInvariants& inv, int p, int r, int k);

/// Closed form evaluated from the invariants alone (no consistency check).
int dim_v2_formula(int p, int r, int k, int d_atilde, int d_h, int z_beta);

/// Dimension of the uniformly constructed subspace W_2^2.
int dim_w2(int p, int r, int k, int d_alpha);

}  // namespace c2iga
