#include "c2iga/quadrature.hpp"

#include <stdexcept>

#include "c2iga/geometry.hpp"

namespace c2iga {

QuadratureRule gauss_rule(int points_per_cell,
                          const std::vector<std::pair<double, double>>& cells) {
  if (points_per_cell < 1) {
    throw std::invalid_argument("points_per_cell must be at least 1");
  }
  std::vector<double> x, w;
  gauss_legendre(points_per_cell, x, w);
  QuadratureRule rule;
  rule.points_per_cell = points_per_cell;
  rule.cells = cells;
  for (const auto& [a, b] : cells) {
    for (int i = 0; i < points_per_cell; ++i) {
      rule.nodes.push_back(a + (b - a) * x[i]);
      rule.weights.push_back((b - a) * w[i]);
    }
  }
  return rule;
}

}  // namespace c2iga
