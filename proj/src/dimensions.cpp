#include "c2iga/dimensions.hpp"

#include <stdexcept>
#include <string>

namespace c2iga {

namespace {

void check_range(int p, int r, int k) {
  if (p < 5 || r < 2 || r > p - 3 || k < 0) {
    throw std::invalid_argument("need p >= 5, 2 <= r <= p-3, k >= 0 (got p=" +
                                std::to_string(p) + ", r=" + std::to_string(r) +
                                ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

int dim_v1(int p, int r, int k) {
  check_range(p, r, k);
  return 2 * (p - 2 + k * (p - r)) * (p + 1 + k * (p - r));
}

GammaDims dim_gamma(const GluingInvariants& inv, int p, int r, int k) {
  check_range(p, r, k);
  const int da = inv.d_atilde, dh = inv.d_h, z = inv.z_beta;
  if (p - 2 * da < r + 1 || p - da - dh < r + 2) {
    throw std::invalid_argument("degree budget too small for the trace spaces");
  }
  GammaDims d;
  d.gamma0 = k * (p - r - 1) + p + z + 1;
  d.gamma1 = k * (p - da - dh - r - 1) + p - da - dh + z + 1;
  d.gamma2 = k * (p - 2 * da - r) + p + 1 - 2 * da;
  return d;
}

int dim_v2_formula(int p, int r, int k, int d_atilde, int d_h, int z_beta) {
  return (k + 1) * (3 * (p + 1) - 3 * d_atilde - d_h) - (3 * r + 5) * k +
         2 * z_beta;
}

int dim_v2(const GluingInvariants& inv, int p, int r, int k) {
  const int sum = dim_gamma(inv, p, r, k).total();
  const int closed = dim_v2_formula(p, r, k, inv.d_atilde, inv.d_h, inv.z_beta);
  if (sum != closed) {
    throw std::logic_error("dimension formula disagrees with trace-space sum");
  }
  return closed;
}

int dim_w2(int p, int r, int k, int d_alpha) {
  check_range(p, r, k);
  if (p - 2 * d_alpha < r) {
    throw std::invalid_argument("degree budget p - 2 d_alpha < r");
  }
  return (k + 1) * (3 * p - 3 * d_alpha) + 3 * (1 - k - k * r);
}

}  // namespace c2iga
