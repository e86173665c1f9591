#pragma once

#include <stdexcept>
#include <vector>

#include "c2iga/bspline.hpp"
#include "c2iga/gluing.hpp"

namespace c2iga {

/// Raised when a numerical rank cannot be decided.
class IndeterminateRank : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NullspaceReport {
  int dimension = 0;
  /// Smallest retained singular value over largest discarded one (infinite
  /// if nothing is discarded).
  double gap = 0.0;
  bool determinate = false;
  int rows = 0, cols = 0;
  std::vector<double> singular_values;  // descending, normalized by the max
};

/// Dimension of the space of interface coefficient columns d_{i,j}^(S),
/// i <= 2, satisfying the C^0, C^1 and C^2 interface conditions in their
/// original form, found as the numerical nullspace of the collocated
/// homogeneous system. Zero threshold is `zero_tol` relative to the largest
/// singular value; a gap below `min_gap` is flagged indeterminate.
NullspaceReport constraint_nullspace(const GluingData& g, const KnotVector& base,
                                     double zero_tol = 1e-9,
                                     double min_gap = 1e2);

/// Same, returning only the dimension; throws IndeterminateRank if the gap
/// is too small.
int constraint_nullspace_dim(const GluingData& g, const KnotVector& base);

}  // namespace c2iga
