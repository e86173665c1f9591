#pragma once

#include <utility>
#include <vector>

namespace c2iga {

/// Gauss-Legendre points mapped to each cell; cell c owns the points
/// [c * points_per_cell, (c+1) * points_per_cell).
struct QuadratureRule {
  int points_per_cell = 0;
  std::vector<std::pair<double, double>> cells;
  std::vector<double> nodes, weights;

  int num_cells() const { return static_cast<int>(cells.size()); }
};

QuadratureRule gauss_rule(int points_per_cell,
                          const std::vector<std::pair<double, double>>& cells);

}  // namespace c2iga
