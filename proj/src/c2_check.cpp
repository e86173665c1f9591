#include "c2iga/c2_check.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace c2iga {

namespace {

struct Physical {
  double value;
  Eigen::Vector2d grad;
  Eigen::Matrix2d hess;
};

Physical pull_back(const TwoPatchGeometry& f, Side s,
                   std::span<const double> c, double v) {
  const SplineSpace& sp = f.space();
  const PatchJet j = f.jet(s, 0.0, v);
  Eigen::Matrix2d J;
  J.col(0) = j.xu;
  J.col(1) = j.xv;
  const double det = J.determinant();
  if (std::abs(det) < 1e-14 * j.xu.norm() * j.xv.norm()) {
    throw std::runtime_error("singular Jacobian on the interface");
  }
  const double g = eval_tensor(sp, c, 0.0, v, 0, 0);
  const Eigen::Vector2d dg(eval_tensor(sp, c, 0.0, v, 1, 0),
                           eval_tensor(sp, c, 0.0, v, 0, 1));
  Eigen::Matrix2d Hg;
  Hg(0, 0) = eval_tensor(sp, c, 0.0, v, 2, 0);
  Hg(0, 1) = Hg(1, 0) = eval_tensor(sp, c, 0.0, v, 1, 1);
  Hg(1, 1) = eval_tensor(sp, c, 0.0, v, 0, 2);
  const Eigen::Matrix2d Jinv = J.inverse();
  Physical out;
  out.value = g;
  out.grad = Jinv.transpose() * dg;
  Eigen::Matrix2d Hx, Hy;
  Hx << j.xuu.x(), j.xuv.x(), j.xuv.x(), j.xvv.x();
  Hy << j.xuu.y(), j.xuv.y(), j.xuv.y(), j.xvv.y();
  out.hess = Jinv.transpose() * (Hg - out.grad.x() * Hx - out.grad.y() * Hy) *
             Jinv;
  return out;
}

}  // namespace

C2Report verify_c2_at_interface(const TwoPatchGeometry& f,
                                std::span<const double> coeffs_L,
                                std::span<const double> coeffs_R,
                                int n_samples, double tol) {
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  double dv = 0, dg = 0, dh = 0, sv = 0, sg = 0, sh = 0;
  for (int i = 0; i < n_samples; ++i) {
    const double v = n_samples == 1 ? 0.5 : double(i) / (n_samples - 1);
    const Physical L = pull_back(f, Side::Left, coeffs_L, v);
    const Physical R = pull_back(f, Side::Right, coeffs_R, v);
    dv = std::max(dv, std::abs(L.value - R.value));
    dg = std::max(dg, (L.grad - R.grad).norm());
    dh = std::max(dh, (L.hess - R.hess).norm());
    sv = std::max({sv, std::abs(L.value), std::abs(R.value)});
    sg = std::max({sg, L.grad.norm(), R.grad.norm()});
    sh = std::max({sh, L.hess.norm(), R.hess.norm()});
  }
  C2Report rep;
  rep.value = sv > 0 ? dv / sv : dv;
  rep.gradient = sg > 0 ? dg / sg : dg;
  rep.hessian = sh > 0 ? dh / sh : dh;
  rep.passed = rep.value < tol && rep.gradient < tol && rep.hessian < tol;
  return rep;
}

}  // namespace c2iga
