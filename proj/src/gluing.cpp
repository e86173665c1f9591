#include "c2iga/gluing.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace c2iga {

Polynomial beta_from_gluing(const GluingData& g) {
  return g.alpha_L * g.beta_R - g.alpha_R * g.beta_L;
}

bool verify_sign_condition(const GluingData& g) {
  auto root_inside = [](const Polynomial& a) {
    if (a.is_zero()) return true;
    if (a.degree() < 1) return false;
    const double r = -a.coeff(0) / a.coeff(1);
    return r > 0.0 && r < 1.0;
  };
  if (root_inside(g.alpha_L) || root_inside(g.alpha_R)) return false;
  return g.alpha_L(0.0) * g.alpha_R(0.0) < 0.0 &&
         g.alpha_L(1.0) * g.alpha_R(1.0) < 0.0;
}

namespace {

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Polynomial of degree <= deg through samples at v = 0, 1/deg, ..., 1.
Polynomial fit_samples(const std::vector<double>& vals) {
  const int m = static_cast<int>(vals.size());
  Eigen::MatrixXd V(m, m);
  Eigen::VectorXd y(m);
  for (int i = 0; i < m; ++i) {
    const double v = m == 1 ? 0.0 : double(i) / (m - 1);
    for (int j = 0; j < m; ++j) V(i, j) = std::pow(v, j);
    y(i) = vals[i];
  }
  Eigen::VectorXd c = V.colPivHouseholderQr().solve(y);
  return Polynomial(std::vector<double>(c.data(), c.data() + m));
}

}  // namespace

GluingData gluing_from_bilinear(const TwoPatchGeometry& fhat) {
  if (fhat.degree() != 1 || fhat.num_interior_knots() != 0) {
    throw std::invalid_argument("gluing_from_bilinear expects bilinear patches");
  }
  // alpha has degree <= 2 and beta^(S) is rational in general; sample at
  // five points, fit a quartic and insist the result is linear.
  GluingData g;
  const double scale = fhat.diameter();
  for (Side s : kSides) {
    std::vector<double> a(5), b(5), bden(5);
    for (int i = 0; i < 5; ++i) {
      const double v = i / 4.0;
      const PatchJet j = fhat.jet(s, 0.0, v);
      a[i] = cross(j.xu, j.xv);
      b[i] = j.xu.dot(j.xv) / j.xv.squaredNorm();
    }
    Polynomial pa = fit_samples(a), pb = fit_samples(b);
    for (const Polynomial* p : {&pa, &pb}) {
      const double big = std::max(1.0, p->max_abs_coeff());
      for (int d = 2; d <= p->degree(); ++d) {
        if (std::abs(p->coeff(d)) > 1e-10 * big) {
          throw std::invalid_argument("gluing functions are not linear");
        }
      }
    }
    auto trim_linear = [](const Polynomial& p) {
      return Polynomial({p.coeff(0), p.coeff(1)});
    };
    // beta^(S) carries no length scale; alpha scales with diameter^2.
    auto clean = [](Polynomial p, double unit) {
      std::vector<double> c = p.coeffs();
      for (double& x : c)
        if (std::abs(x) < 1e-14 * unit) x = 0.0;
      return Polynomial(c);
    };
    (s == Side::Left ? g.alpha_L : g.alpha_R) =
        clean(trim_linear(pa), scale * scale);
    (s == Side::Left ? g.beta_L : g.beta_R) = clean(trim_linear(pb), 1.0);
  }
  if (!verify_sign_condition(g)) {
    throw std::invalid_argument(
        "sign condition alpha_L * alpha_R < 0 fails on [0,1]");
  }
  return g;
}

const char* branch_name(TildeBranch b) {
  switch (b) {
    case TildeBranch::BetaZero: return "beta=0";
    case TildeBranch::NoRoots: return "no-roots";
    case TildeBranch::OneRoot: return "one-root";
    case TildeBranch::TwoRoots: return "two-roots";
  }
  return "?";
}

KnotVector KnotPattern::build(int degree) const {
  std::vector<double> t(degree + 1, 0.0);
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const int m = degree - regularity[i];
    if (m < 1) throw std::invalid_argument("knot pattern needs a higher degree");
    t.insert(t.end(), m, interior[i]);
  }
  t.insert(t.end(), degree + 1, 1.0);
  return KnotVector(degree, std::move(t));
}

int uniform_regularity(const KnotVector& kv, int fallback) {
  const auto& m = kv.multiplicities();
  if (m.empty()) return fallback;
  for (int mi : m) {
    if (mi != m.front()) {
      throw std::invalid_argument("knot vector has non-uniform multiplicity");
    }
  }
  return kv.degree() - m.front();
}

GluingInvariants gluing_invariants(const GluingData& g, const KnotVector& base,
                                   int regularity) {
  GluingInvariants inv;
  inv.q = linear_gcd(g.alpha_L, g.alpha_R);
  if (inv.q.is_zero()) throw std::invalid_argument("alpha functions vanish");
  auto divide = [&](const Polynomial& a) {
    auto r = a.divide_exact(inv.q, 1e-10);
    if (!r) throw std::logic_error("gcd does not divide alpha");
    return *r;
  };
  inv.atilde_L = divide(g.alpha_L);
  inv.atilde_R = divide(g.alpha_R);
  // h = 1 iff q divides both beta^(S) (the zero polynomial counts as
  // divisible); this coincides with gcd(beta_L, beta_R) = q otherwise.
  const bool divides_both =
      (g.beta_L.is_zero() || g.beta_L.divide_exact(inv.q, 1e-10)) &&
      (g.beta_R.is_zero() || g.beta_R.divide_exact(inv.q, 1e-10));
  inv.h = (inv.q.degree() == 0 || divides_both) ? Polynomial::constant(1.0)
                                                : inv.q;
  inv.beta = beta_from_gluing(g);
  inv.d_alpha = std::max(g.alpha_L.degree(), g.alpha_R.degree());
  inv.d_atilde = std::max(inv.atilde_L.degree(), inv.atilde_R.degree());
  inv.d_h = inv.h.degree();

  const auto& tau = base.interior();
  const int k = static_cast<int>(tau.size());
  const double bmax = inv.beta.max_abs_coeff();
  inv.beta_zero = inv.beta.is_zero() || bmax < 1e-14;
  for (int i = 0; i < k; ++i) {
    if (inv.beta_zero || std::abs(inv.beta(tau[i])) < 1e-10 * bmax) {
      inv.z_beta_set.push_back(i + 1);
    }
  }
  inv.z_beta = static_cast<int>(inv.z_beta_set.size());

  inv.ttilde.interior = tau;
  if (inv.beta_zero) {
    inv.branch = TildeBranch::BetaZero;
    inv.ttilde.regularity.assign(k, regularity);
  } else {
    if (inv.z_beta > 2) {
      throw std::logic_error("nonzero quadratic has more than two roots");
    }
    inv.branch = inv.z_beta == 0   ? TildeBranch::NoRoots
                 : inv.z_beta == 1 ? TildeBranch::OneRoot
                                   : TildeBranch::TwoRoots;
    inv.ttilde.regularity.assign(k, regularity + 1);
    for (int i : inv.z_beta_set) inv.ttilde.regularity[i - 1] = regularity;
  }
  return inv;
}

BilinearLikeReport verify_bilinear_like(const TwoPatchGeometry& f,
                                        const GluingData& g, int n_samples,
                                        double tol) {
  if (n_samples < 2) throw std::invalid_argument("need at least two samples");
  const Polynomial beta = beta_from_gluing(g);
  const Polynomial& aL = g.alpha_L;
  const Polynomial& aR = g.alpha_R;
  const Polynomial eta = 2.0 * aL.derivative() * aR * beta;
  const Polynomial theta =
      2.0 * (aL * g.beta_L.derivative() - aL.derivative() * g.beta_L) * aR *
      beta;
  const double diam = f.diameter();
  BilinearLikeReport rep;
  double worst = -1.0;
  for (int i = 0; i < n_samples; ++i) {
    const double v = double(i) / (n_samples - 1);
    const PatchJet L = f.jet(Side::Left, 0.0, v);
    const PatchJet R = f.jet(Side::Right, 0.0, v);
    const double al = aL(v), ar = aR(v), b = beta(v);

    const double r15 = (L.x - R.x).norm() / diam;

    const Eigen::Vector2d r16 = ar * L.xu - al * R.xu + b * L.xv;
    const double s16 = std::abs(ar) * L.xu.norm() + std::abs(al) * R.xu.norm() +
                       std::abs(b) * L.xv.norm();

    const Eigen::Vector2d t1 = al * al * R.xuu;
    const Eigen::Vector2d t2 = ar * ar * L.xuu;
    const Eigen::Vector2d t3 = 2.0 * ar * b * L.xuv;
    const Eigen::Vector2d t4 = b * b * L.xvv;
    const Eigen::Vector2d z = t1 - (t2 + t3 + t4);
    const Eigen::Vector2d r17 = al * z + eta(v) * L.xu + theta(v) * L.xv;
    const double s17 =
        std::abs(al) * (t1.norm() + t2.norm() + t3.norm() + t4.norm()) +
        std::abs(eta(v)) * L.xu.norm() + std::abs(theta(v)) * L.xv.norm();

    const double e16 = r16.norm() / std::max(s16, 1e-300);
    const double e17 = r17.norm() / std::max(s17, 1e-300);
    rep.interface = std::max(rep.interface, r15);
    rep.first_order = std::max(rep.first_order, e16);
    rep.second_order = std::max(rep.second_order, e17);
    const double w = std::max({r15, e16, e17});
    if (w > worst) {
      worst = w;
      rep.worst_v = v;
    }
  }
  rep.passed = rep.interface < tol && rep.first_order < tol &&
               rep.second_order < tol;
  return rep;
}

}  // namespace c2iga
