#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "c2iga/bspline.hpp"
#include "c2iga/gluing.hpp"
#include "c2iga/triplet.hpp"

namespace c2iga {

/// Tie-break among admissible B-splines of a multiplicity-raised space.
enum class SelectionPolicy { SmallestIndex, Centered };

/// Indices of B-splines of base.raised(which, extra) that are nonzero at the
/// raised knot and whose derivative of order p - m + 1 (m the new
/// multiplicity) jumps there, i.e. that are not in the unrefined space.
std::vector<int> refined_candidates(const KnotVector& base, int which,
                                    int extra);

SplineFunction select_refined_bspline(
    const KnotVector& base, int which, int extra,
    SelectionPolicy policy = SelectionPolicy::Centered);

/// Interface basis of V_2^2 or W_2^2 with its coefficient matrices.
struct SmoothBasis {
  SmoothBasis(KnotVector base_knots, int reg)
      : base(std::move(base_knots)), regularity(reg), n(base.num_basis()) {}

  KnotVector base;  // T_k^{p,r}
  int regularity;
  int n;
  std::vector<BasisTriplet> triplets;
  /// Row m holds the coefficients of g_m^(S) on N_i(u) N_j(v), column
  /// i * n + j with i = 0, 1, 2.
  Eigen::MatrixXd A_L, A_R;
  std::array<int, 3> level_counts{0, 0, 0};

  int size() const { return static_cast<int>(triplets.size()); }
  const Eigen::MatrixXd& A(Side s) const { return s == Side::Left ? A_L : A_R; }
  /// Full n x n coefficient grid of g_m^(S), i-major.
  std::vector<double> grid(int m, Side s) const;
};

SmoothBasis build_basis_v2(const GluingData& g, const GluingInvariants& inv,
                           const KnotVector& base, int regularity,
                           SelectionPolicy policy = SelectionPolicy::Centered);

SmoothBasis build_basis_w2(const GluingData& g, const KnotVector& base,
                           int regularity);

/// (side, i, j) of the interior basis functions N_{i,j} with i >= 3.
struct InteriorIndex {
  Side side;
  int i, j;
};
std::vector<InteriorIndex> v1_index_set(int n);

/// All basis functions (interface part first, then the interior part if
/// requested) as rows over the tensor B-splines of both patches: column
/// s * n^2 + i * n + j with s = 0 for L and 1 for R.
Eigen::SparseMatrix<double, Eigen::RowMajor> coefficient_matrix(
    const SmoothBasis& basis, bool with_interior);

/// Stacked [A_L | A_R] for rank checks.
Eigen::MatrixXd stacked(const SmoothBasis& basis);

}  // namespace c2iga
