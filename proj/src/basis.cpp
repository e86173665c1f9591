#include "c2iga/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "c2iga/dimensions.hpp"

namespace c2iga {

std::vector<int> refined_candidates(const KnotVector& base, int which,
                                    int extra) {
  const KnotVector raised = base.raised(which, extra);
  const int p = raised.degree();
  const double tau = base.interior()[which - 1];
  const int m = raised.multiplicities()[which - 1];
  const int order = p - m + 1;
  const SplineSpace space(raised);
  const BasisValues right = space.eval_basis(tau, order);
  const BasisValues left = space.eval_basis_left(tau, order);
  auto value = [](const BasisValues& b, int d, int i) {
    const int l = i - b.first;
    return (l >= 0 && l < b.order) ? b(d, l) : 0.0;
  };
  double scale = 0.0;
  for (int i = 0; i < space.dim(); ++i) {
    scale = std::max({scale, std::abs(value(right, order, i)),
                      std::abs(value(left, order, i))});
  }
  std::vector<int> out;
  for (int i = 0; i < space.dim(); ++i) {
    const double v = value(right, 0, i);
    const double jump = value(right, order, i) - value(left, order, i);
    if (std::abs(v) > 1e-12 && std::abs(jump) > 1e-6 * scale) out.push_back(i);
  }
  return out;
}

SplineFunction select_refined_bspline(const KnotVector& base, int which,
                                      int extra, SelectionPolicy policy) {
  const auto cand = refined_candidates(base, which, extra);
  if (cand.empty()) {
    throw std::runtime_error("no B-spline with the required smoothness defect");
  }
  const int idx = policy == SelectionPolicy::SmallestIndex
                      ? cand.front()
                      : cand[(cand.size() - 1) / 2];
  return SplineFunction::bspline(SplineSpace(base.raised(which, extra)), idx);
}

std::vector<double> SmoothBasis::grid(int m, Side s) const {
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  const auto& a = A(s);
  for (int c = 0; c < 3 * n; ++c) out[c] = a(m, c);
  return out;
}

namespace {

Polynomial scaled(double c, const Polynomial& p) { return c * p; }

void fill_matrices(SmoothBasis& b, const GluingData& g,
                   const GluingInvariants& inv) {
  const EdgeFunctions ef(b.base);
  const int dim = b.size();
  b.A_L = Eigen::MatrixXd::Zero(dim, 3 * b.n);
  b.A_R = Eigen::MatrixXd::Zero(dim, 3 * b.n);
  for (int m = 0; m < dim; ++m) {
    for (Side s : kSides) {
      const Eigen::MatrixXd rows =
          surface_from_triplet(b.triplets[m], g, inv, s, ef);
      Eigen::MatrixXd& A = s == Side::Left ? b.A_L : b.A_R;
      for (int i = 0; i < 3; ++i) A.block(m, i * b.n, 1, b.n) = rows.row(i);
    }
  }
  for (const auto& t : b.triplets) ++b.level_counts[family_level(t.family)];
}

TraceFunction term(Polynomial factor, SplineFunction s, int deriv) {
  return TraceFunction({TraceTerm{std::move(factor), std::move(s), deriv}});
}

}  // namespace

SmoothBasis build_basis_v2(const GluingData& g, const GluingInvariants& inv,
                           const KnotVector& base, int r,
                           SelectionPolicy policy) {
  const int p = base.degree();
  const int k = base.num_interior();
  const auto& tau = base.interior();
  const GammaDims dims = dim_gamma(inv, p, r, k);
  SmoothBasis b(base, r);

  const Polynomial one = Polynomial::constant(1.0);
  const Polynomial& aL = inv.atilde_L;
  const Polynomial& aR = inv.atilde_R;
  const Polynomial& bL = g.beta_L;
  const Polynomial& bR = g.beta_R;
  const Polynomial& q = inv.q;

  // Gamma_0: regular part of S(T^{p,r+2}).
  const KnotVector t0 = KnotVector::with_regularity(p, r + 2, tau);
  const SplineSpace s0(t0);
  for (int j = 0; j < s0.dim(); ++j) {
    BasisTriplet t{Family::Gamma0Regular, j, {}};
    t.g[0] = TraceFunction::of(SplineFunction::bspline(s0, j));
    b.triplets.push_back(std::move(t));
  }
  // Gamma_0: one extra function per interior knot.
  for (int j = 0; j < k; ++j) {
    const double x = tau[j];
    const SplineFunction N = select_refined_bspline(t0, j + 1, 1, policy);
    const double c1 = -(aR(x) * bL(x) + aL(x) * bR(x)) /
                      (2.0 * aR(x) * aL(x) * q(x));
    const double c2 = bL(x) * bR(x) / (aL(x) * aR(x));
    BasisTriplet t{Family::Gamma0Knot, j, {}};
    t.g[0] = TraceFunction::of(N);
    t.g[1] = term(scaled(c1, q), N, 1);
    t.g[2] = term(scaled(c2, one), N, 2);
    b.triplets.push_back(std::move(t));
  }
  // Gamma_0: extra functions at the roots of beta.
  for (int j = 0; j < inv.z_beta; ++j) {
    const int i = inv.z_beta_set[j];
    const double x = tau[i - 1];
    const SplineFunction N = select_refined_bspline(t0, i, 2, policy);
    const double ratio = bL(x) / aL(x);
    BasisTriplet t{Family::Gamma0ZBeta, j, {}};
    t.g[0] = TraceFunction::of(N);
    t.g[1] = term(scaled(-ratio / q(x), q), N, 1);
    t.g[2] = term(scaled(ratio * ratio, one), N, 2);
    b.triplets.push_back(std::move(t));
  }
  // Gamma_1.
  const int p1 = p - inv.d_atilde - inv.d_h;
  const KnotVector t1 = KnotVector::with_regularity(p1, r + 1, tau);
  const SplineSpace s1(t1);
  for (int j = 0; j < s1.dim(); ++j) {
    BasisTriplet t{Family::Gamma1Regular, j, {}};
    t.g[1] = term(inv.h, SplineFunction::bspline(s1, j), 0);
    b.triplets.push_back(std::move(t));
  }
  for (int j = 0; j < inv.z_beta; ++j) {
    const int i = inv.z_beta_set[j];
    const double x = tau[i - 1];
    const SplineFunction N = select_refined_bspline(t1, i, 1, policy);
    BasisTriplet t{Family::Gamma1ZBeta, j, {}};
    t.g[1] = term(inv.h, N, 0);
    t.g[2] = term(scaled(-2.0 * bL(x) / aL(x), inv.h), N, 1);
    b.triplets.push_back(std::move(t));
  }
  // Gamma_2.
  const KnotVector t2 =
      KnotVector::with_regularity(p - 2 * inv.d_atilde, r, tau);
  const SplineSpace s2(t2);
  for (int j = 0; j < s2.dim(); ++j) {
    BasisTriplet t{Family::Gamma2, j, {}};
    t.g[2] = TraceFunction::of(SplineFunction::bspline(s2, j));
    b.triplets.push_back(std::move(t));
  }
  if (b.size() != dims.total()) {
    throw std::logic_error("basis size disagrees with the dimension formula");
  }
  fill_matrices(b, g, inv);
  return b;
}

SmoothBasis build_basis_w2(const GluingData& g, const KnotVector& base, int r) {
  const int p = base.degree();
  const int k = base.num_interior();
  const auto& tau = base.interior();
  const int da = std::max(g.alpha_L.degree(), g.alpha_R.degree());
  const int expected = dim_w2(p, r, k, da);
  SmoothBasis b(base, r);
  const std::array<std::pair<int, int>, 3> spaces{
      {{p, r + 2}, {p - da, r + 1}, {p - 2 * da, r}}};
  const std::array<Family, 3> fam{Family::W0, Family::W1, Family::W2};
  for (int level = 0; level < 3; ++level) {
    const SplineSpace s(KnotVector::with_regularity(
        spaces[level].first, spaces[level].second, tau));
    for (int j = 0; j < s.dim(); ++j) {
      BasisTriplet t{fam[level], j, {}};
      t.g[level] = TraceFunction::of(SplineFunction::bspline(s, j));
      b.triplets.push_back(std::move(t));
    }
  }
  if (b.size() != expected) {
    throw std::logic_error("basis size disagrees with the dimension formula");
  }
  // The W form only reads alpha and beta^(S); the invariants are unused.
  GluingInvariants none;
  fill_matrices(b, g, none);
  return b;
}

std::vector<InteriorIndex> v1_index_set(int n) {
  std::vector<InteriorIndex> out;
  out.reserve(static_cast<std::size_t>(2) * (n - 3) * n);
  for (Side s : kSides)
    for (int i = 3; i < n; ++i)
      for (int j = 0; j < n; ++j) out.push_back({s, i, j});
  return out;
}

Eigen::SparseMatrix<double, Eigen::RowMajor> coefficient_matrix(
    const SmoothBasis& basis, bool with_interior) {
  const int n = basis.n;
  const long nn = static_cast<long>(n) * n;
  const auto interior = with_interior ? v1_index_set(n)
                                      : std::vector<InteriorIndex>{};
  const long rows = basis.size() + static_cast<long>(interior.size());
  std::vector<Eigen::Triplet<double>> trip;
  for (int m = 0; m < basis.size(); ++m) {
    for (Side s : kSides) {
      const long off = s == Side::Left ? 0 : nn;
      const auto& A = basis.A(s);
      for (int c = 0; c < 3 * n; ++c) {
        if (A(m, c) != 0.0) trip.emplace_back(m, off + c, A(m, c));
      }
    }
  }
  long row = basis.size();
  for (const auto& ix : interior) {
    const long off = ix.side == Side::Left ? 0 : nn;
    trip.emplace_back(row++, off + static_cast<long>(ix.i) * n + ix.j, 1.0);
  }
  Eigen::SparseMatrix<double, Eigen::RowMajor> C(rows, 2 * nn);
  C.setFromTriplets(trip.begin(), trip.end());
  return C;
}

Eigen::MatrixXd stacked(const SmoothBasis& basis) {
  Eigen::MatrixXd S(basis.size(), 6 * basis.n);
  S << basis.A_L, basis.A_R;
  return S;
}

}  // namespace c2iga
