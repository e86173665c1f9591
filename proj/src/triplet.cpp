#include "c2iga/triplet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace c2iga {

double TraceFunction::operator()(double v, int d) const {
  static constexpr int binom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  if (d > 2) throw std::invalid_argument("trace derivative order above 2");
  double s = 0.0;
  for (const auto& t : terms_) {
    const int p = t.spline.space().degree();
    for (int i = 0; i <= d; ++i) {
      const int order = t.deriv + d - i;
      if (order > p) continue;
      const double fi = t.factor(v, i);
      if (fi != 0.0) s += binom[d][i] * fi * t.spline(v, order);
    }
  }
  return s;
}

namespace {

// Sample points strictly inside every span, away from Greville abscissae.
std::vector<double> check_points(const SplineSpace& space) {
  std::vector<double> pts;
  for (const auto& [a, b] : space.spans())
    for (double f : {0.137, 0.421, 0.733, 0.911}) pts.push_back(a + f * (b - a));
  return pts;
}

SplineFunction interpolate_checked(const GrevilleInterpolator& interp,
                                   const auto& target, double tol,
                                   const char* what) {
  const auto& xi = interp.points();
  std::vector<double> s(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) s[i] = target(xi[i]);
  SplineFunction f(interp.space(), interp.solve(s));
  double scale = 0.0, err = 0.0;
  for (double x : xi) scale = std::max(scale, std::abs(target(x)));
  for (double x : check_points(interp.space())) {
    const double t = target(x);
    scale = std::max(scale, std::abs(t));
    err = std::max(err, std::abs(f(x) - t));
  }
  if (err > tol * std::max(scale, 1e-300)) {
    throw std::runtime_error(std::string(what) +
                             " is not representable in the target space");
  }
  return f;
}

}  // namespace

SplineFunction TraceFunction::represent_in(const SplineSpace& space,
                                           double tol) const {
  GrevilleInterpolator interp(space);
  return interpolate_checked(
      interp, [this](double v) { return (*this)(v, 0); }, tol, "trace function");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Gamma0Regular: return "gamma0_regular";
    case Family::Gamma0Knot: return "gamma0_knot";
    case Family::Gamma0ZBeta: return "gamma0_zbeta";
    case Family::Gamma1Regular: return "gamma1_regular";
    case Family::Gamma1ZBeta: return "gamma1_zbeta";
    case Family::Gamma2: return "gamma2";
    case Family::W0: return "w0";
    case Family::W1: return "w1";
    case Family::W2: return "w2";
  }
  return "?";
}

int family_level(Family f) {
  switch (f) {
    case Family::Gamma0Regular:
    case Family::Gamma0Knot:
    case Family::Gamma0ZBeta:
    case Family::W0:
      return 0;
    case Family::Gamma1Regular:
    case Family::Gamma1ZBeta:
    case Family::W1:
      return 1;
    default:
      return 2;
  }
}

EdgeFunctions::EdgeFunctions(const KnotVector& base)
    : space(base),
      tau1(base.first_knot()),
      M0(space, std::vector<double>(space.dim())),
      M1(space, std::vector<double>(space.dim())),
      M2(space, std::vector<double>(space.dim())),
      interp(space) {
  const int p = base.degree();
  const int n = space.dim();
  if (n < 3 || p < 2) throw std::invalid_argument("edge functions need p >= 2");
  std::vector<double> c0(n, 0.0), c1(n, 0.0), c2(n, 0.0);
  c0[0] = c0[1] = c0[2] = 1.0;
  c1[1] = tau1 / p;
  c1[2] = 2.0 * tau1 / p;
  c2[2] = tau1 * tau1 / (p * (p - 1.0));
  M0 = SplineFunction(space, c0);
  M1 = SplineFunction(space, c1);
  M2 = SplineFunction(space, c2);
}

std::array<double, 3> trace_values(const BasisTriplet& t, const GluingData& g,
                                   const GluingInvariants& inv, Side side,
                                   double v) {
  const bool w = is_w_family(t.family);
  const Polynomial& a = w ? g.alpha(side) : inv.atilde(side);
  const double av = a(v);
  const double bv = g.beta(side)(v);
  const auto& [g0, g1, g2] = t.g;
  const double g0d1 = g0.is_zero() ? 0.0 : g0(v, 1);
  const double g0d2 = g0.is_zero() ? 0.0 : g0(v, 2);
  const double g1v = g1.is_zero() ? 0.0 : g1(v, 0);
  const double g1d1 = g1.is_zero() ? 0.0 : g1(v, 1);
  const double g2v = g2.is_zero() ? 0.0 : g2(v, 0);
  double g1corr = g1d1;
  if (!w && inv.q.degree() > 0) g1corr -= g1v * inv.q(v, 1) / inv.q(v);
  return {g0.is_zero() ? 0.0 : g0(v, 0), av * g1v + bv * g0d1,
          bv * bv * g0d2 + 2.0 * av * bv * g1corr + av * av * g2v};
}

Eigen::MatrixXd surface_from_triplet(const BasisTriplet& t,
                                     const GluingData& g,
                                     const GluingInvariants& inv, Side side,
                                     const EdgeFunctions& ef, double tol) {
  const int p = ef.space.degree();
  const int n = ef.space.dim();
  const double c1 = ef.tau1 / p;
  const double c2 = ef.tau1 * ef.tau1 / (p * (p - 1.0));
  Eigen::MatrixXd rows = Eigen::MatrixXd::Zero(3, n);
  const bool zero0 = t.g[0].is_zero();
  const bool zero01 = zero0 && t.g[1].is_zero();
  auto tv = [&](double v) { return trace_values(t, g, inv, side, v); };
  // Column i multiplies N_i(u), i = 0, 1, 2. Columns whose target vanishes
  // identically are left untouched so the zeros are exact.
  if (!zero0) {
    auto f = interpolate_checked(
        ef.interp, [&](double v) { return tv(v)[0]; }, tol, "trace g(0,v)");
    rows.row(0) = Eigen::Map<const Eigen::RowVectorXd>(f.coeffs().data(), n);
  }
  if (!zero01) {
    auto f = interpolate_checked(
        ef.interp,
        [&](double v) {
          const auto a = tv(v);
          return a[0] + c1 * a[1];
        },
        tol, "first-derivative column");
    rows.row(1) = Eigen::Map<const Eigen::RowVectorXd>(f.coeffs().data(), n);
  }
  auto f = interpolate_checked(
      ef.interp,
      [&](double v) {
        const auto a = tv(v);
        return a[0] + 2.0 * c1 * a[1] + c2 * a[2];
      },
      tol, "second-derivative column");
  rows.row(2) = Eigen::Map<const Eigen::RowVectorXd>(f.coeffs().data(), n);
  return rows;
}

}  // namespace c2iga
