#include "c2iga/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace c2iga {

namespace {

constexpr double kKnotTol = 1e-12;

bool same_knot(double a, double b) { return std::abs(a - b) <= kKnotTol; }

}  // namespace

KnotVector::KnotVector(int degree, std::vector<double> knots)
    : degree_(degree), knots_(std::move(knots)) {
  if (degree_ < 0) throw std::invalid_argument("negative spline degree");
  const auto m = static_cast<int>(knots_.size());
  if (m < 2 * (degree_ + 1)) {
    throw std::invalid_argument("knot vector too short for degree " +
                                std::to_string(degree_));
  }
  for (int i = 0; i <= degree_; ++i) {
    if (knots_[i] != 0.0 || knots_[m - 1 - i] != 1.0) {
      throw std::invalid_argument(
          "knot vector must be open on [0,1] with multiplicity p+1 at the ends");
    }
  }
  if (knots_[degree_ + 1] == 0.0 || knots_[m - degree_ - 2] == 1.0) {
    throw std::invalid_argument("boundary knot multiplicity exceeds p+1");
  }
  for (int i = 1; i < m; ++i) {
    if (!(knots_[i] >= knots_[i - 1])) {
      throw std::invalid_argument("knot vector is not nondecreasing");
    }
  }
  for (int i = degree_ + 1; i < m - degree_ - 1;) {
    int j = i;
    while (j < m - degree_ - 1 && knots_[j] == knots_[i]) ++j;
    const int mult = j - i;
    if (mult > degree_) {
      throw std::invalid_argument("interior knot multiplicity exceeds degree");
    }
    interior_.push_back(knots_[i]);
    mult_.push_back(mult);
    i = j;
  }
}

KnotVector KnotVector::with_regularity(int degree, int regularity,
                                       std::span<const double> interior) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  if (regularity < 0 || regularity > degree - 1) {
    throw std::invalid_argument("regularity must lie in [0, p-1]");
  }
  double prev = 0.0;
  for (double t : interior) {
    if (!(t > prev) || !(t < 1.0)) {
      throw std::invalid_argument(
          "interior knots must be strictly increasing inside (0,1)");
    }
    prev = t;
  }
  std::vector<double> knots(degree + 1, 0.0);
  for (double t : interior) knots.insert(knots.end(), degree - regularity, t);
  knots.insert(knots.end(), degree + 1, 1.0);
  return KnotVector(degree, std::move(knots));
}

KnotVector KnotVector::uniform(int degree, int regularity, int k) {
  if (k < 0) throw std::invalid_argument("negative number of interior knots");
  std::vector<double> inner(k);
  for (int i = 0; i < k; ++i) inner[i] = double(i + 1) / double(k + 1);
  return with_regularity(degree, regularity, inner);
}

KnotVector KnotVector::raised(int which, int times) const {
  if (which < 1 || which > num_interior()) {
    throw std::invalid_argument("interior knot index out of range");
  }
  if (times < 0 || mult_[which - 1] + times > degree_) {
    throw std::invalid_argument("raised multiplicity would exceed degree");
  }
  std::vector<double> knots = knots_;
  const double t = interior_[which - 1];
  const auto pos = std::upper_bound(knots.begin(), knots.end(), t);
  knots.insert(pos, times, t);
  return KnotVector(degree_, std::move(knots));
}

int KnotVector::find_span(double x) const {
  const int n = num_basis();
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::out_of_range("evaluation point outside [0,1]");
  }
  if (x >= 1.0) return n - 1;
  // largest s in [p, n-1] with t_s <= x
  const auto it = std::upper_bound(knots_.begin() + degree_,
                                   knots_.begin() + n, x);
  return static_cast<int>(it - knots_.begin()) - 1;
}

int KnotVector::find_span_left(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::out_of_range("evaluation point outside [0,1]");
  }
  if (x <= 0.0) return degree_;
  // largest s with t_s < x
  const auto it = std::lower_bound(knots_.begin() + degree_,
                                   knots_.begin() + num_basis(), x);
  return static_cast<int>(it - knots_.begin()) - 1;
}

bool KnotVector::operator==(const KnotVector& other) const {
  if (degree_ != other.degree_ || knots_.size() != other.knots_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!same_knot(knots_[i], other.knots_[i])) return false;
  }
  return true;
}

BasisValues SplineSpace::eval_basis(double x, int max_deriv) const {
  BasisValues out;
  eval_basis(x, max_deriv, out);
  return out;
}

void SplineSpace::eval_basis(double x, int max_deriv, BasisValues& out) const {
  eval_in_span(kv_.find_span(x), x, max_deriv, out);
}

BasisValues SplineSpace::eval_basis_left(double x, int max_deriv) const {
  BasisValues out;
  eval_in_span(kv_.find_span_left(x), x, max_deriv, out);
  return out;
}

void SplineSpace::eval_in_span(int s, double x, int max_deriv,
                               BasisValues& out) const {
  const int p = degree();
  const auto& t = kv_.knots();
  const int nd = std::max(0, max_deriv);
  out.first = s - p;
  out.order = p + 1;
  out.derivs = nd;
  out.data.assign(static_cast<std::size_t>((nd + 1) * (p + 1)), 0.0);

  // Triangular table of basis values and knot differences.
  std::vector<double> ndu((p + 1) * (p + 1));
  std::vector<double> left(p + 1), right(p + 1);
  auto NDU = [&](int i, int j) -> double& { return ndu[i * (p + 1) + j]; };
  NDU(0, 0) = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = x - t[s + 1 - j];
    right[j] = t[s + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      NDU(j, r) = right[r + 1] + left[j - r];
      const double temp = NDU(r, j - 1) / NDU(j, r);
      NDU(r, j) = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    NDU(j, j) = saved;
  }
  for (int j = 0; j <= p; ++j) out(0, j) = NDU(j, p);

  const int nmax = std::min(nd, p);
  std::vector<double> a(2 * (p + 1));
  auto A = [&](int row, int j) -> double& { return a[row * (p + 1) + j]; };
  for (int r = 0; r <= p; ++r) {
    int s1 = 0, s2 = 1;
    A(0, 0) = 1.0;
    for (int k = 1; k <= nmax; ++k) {
      double d = 0.0;
      const int rk = r - k;
      const int pk = p - k;
      if (r >= k) {
        A(s2, 0) = A(s1, 0) / NDU(pk + 1, rk);
        d = A(s2, 0) * NDU(rk, pk);
      }
      const int j1 = rk >= -1 ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        A(s2, j) = (A(s1, j) - A(s1, j - 1)) / NDU(pk + 1, rk + j);
        d += A(s2, j) * NDU(rk + j, pk);
      }
      if (r <= pk) {
        A(s2, k) = -A(s1, k - 1) / NDU(pk + 1, r);
        d += A(s2, k) * NDU(r, pk);
      }
      out(k, r) = d;
      std::swap(s1, s2);
    }
  }
  double fac = p;
  for (int k = 1; k <= nmax; ++k) {
    for (int j = 0; j <= p; ++j) out(k, j) *= fac;
    fac *= (p - k);
  }
}

double SplineSpace::eval_single(int index, double x, int deriv) const {
  const BasisValues b = eval_basis(x, deriv);
  const int l = index - b.first;
  if (l < 0 || l > degree()) return 0.0;
  return b(deriv, l);
}

std::vector<double> SplineSpace::greville() const {
  const int p = degree();
  const int n = dim();
  const auto& t = kv_.knots();
  std::vector<double> xi(n);
  if (p == 0) {
    for (int i = 0; i < n; ++i) xi[i] = 0.5 * (t[i] + t[i + 1]);
    return xi;
  }
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int l = 1; l <= p; ++l) sum += t[i + l];
    xi[i] = sum / p;
  }
  xi.front() = 0.0;
  xi.back() = 1.0;
  return xi;
}

std::vector<std::pair<double, double>> SplineSpace::spans() const {
  std::vector<std::pair<double, double>> out;
  double prev = 0.0;
  for (double t : kv_.interior()) {
    out.emplace_back(prev, t);
    prev = t;
  }
  out.emplace_back(prev, 1.0);
  return out;
}

SplineFunction::SplineFunction(SplineSpace space, std::vector<double> coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != space_.dim()) {
    throw std::invalid_argument("coefficient count does not match space");
  }
}

SplineFunction SplineFunction::bspline(const SplineSpace& space, int index) {
  if (index < 0 || index >= space.dim()) {
    throw std::out_of_range("B-spline index out of range");
  }
  std::vector<double> c(space.dim(), 0.0);
  c[index] = 1.0;
  return SplineFunction(space, std::move(c));
}

double SplineFunction::operator()(double x, int deriv) const {
  if (deriv > space_.degree()) return 0.0;
  const BasisValues b = space_.eval_basis(x, deriv);
  double sum = 0.0;
  for (int l = 0; l < b.order; ++l) sum += coeffs_[b.first + l] * b(deriv, l);
  return sum;
}

GrevilleInterpolator::GrevilleInterpolator(SplineSpace space)
    : space_(std::move(space)), xi_(space_.greville()), n_(space_.dim()) {
  const int p = space_.degree();
  std::vector<BasisValues> rows(n_);
  for (int i = 0; i < n_; ++i) {
    rows[i] = space_.eval_basis(xi_[i], 0);
    band_ = std::max({band_, std::abs(rows[i].first - i),
                      std::abs(rows[i].first + p - i)});
  }
  const int w = 2 * band_ + 1;
  lu_.assign(static_cast<std::size_t>(n_) * w, 0.0);
  auto at = [&](int i, int j) -> double& { return lu_[i * w + (j - i + band_)]; };
  for (int i = 0; i < n_; ++i) {
    for (int l = 0; l <= p; ++l) {
      const int j = rows[i].first + l;
      if (j >= 0 && j < n_) at(i, j) = rows[i](0, l);
    }
  }
  for (int k = 0; k < n_; ++k) {
    const double piv = at(k, k);
    if (std::abs(piv) < 1e-14) {
      throw std::runtime_error(
          "singular Greville collocation matrix (invalid spline space)");
    }
    const int last = std::min(n_ - 1, k + band_);
    for (int i = k + 1; i <= last; ++i) {
      const double l = at(i, k) / piv;
      if (l == 0.0) continue;
      at(i, k) = l;
      for (int j = k + 1; j <= last; ++j) at(i, j) -= l * at(k, j);
    }
  }
}

std::vector<double> GrevilleInterpolator::solve(
    std::span<const double> samples) const {
  if (static_cast<int>(samples.size()) != n_) {
    throw std::invalid_argument("sample count does not match space dimension");
  }
  const int w = 2 * band_ + 1;
  auto at = [&](int i, int j) { return lu_[i * w + (j - i + band_)]; };
  std::vector<double> x(samples.begin(), samples.end());
  for (int i = 0; i < n_; ++i) {
    for (int j = std::max(0, i - band_); j < i; ++j) x[i] -= at(i, j) * x[j];
  }
  for (int i = n_ - 1; i >= 0; --i) {
    const int last = std::min(n_ - 1, i + band_);
    for (int j = i + 1; j <= last; ++j) x[i] -= at(i, j) * x[j];
    x[i] /= at(i, i);
  }
  return x;
}

SplineFunction interpolate_at_greville(const SplineSpace& space,
                                       std::span<const double> samples) {
  GrevilleInterpolator interp(space);
  return SplineFunction(space, interp.solve(samples));
}

double eval_tensor(const SplineSpace& space, std::span<const double> coeffs,
                   double u, double v, int du, int dv) {
  const int n = space.dim();
  if (static_cast<int>(coeffs.size()) != n * n) {
    throw std::invalid_argument("tensor coefficient grid has wrong size");
  }
  if (du > space.degree() || dv > space.degree()) return 0.0;
  const BasisValues bu = space.eval_basis(u, du);
  const BasisValues bv = space.eval_basis(v, dv);
  double sum = 0.0;
  for (int a = 0; a < bu.order; ++a) {
    double row = 0.0;
    const int i = bu.first + a;
    for (int b = 0; b < bv.order; ++b) {
      row += coeffs[i * n + bv.first + b] * bv(dv, b);
    }
    sum += bu(du, a) * row;
  }
  return sum;
}

namespace {

// Boehm insertion of a single knot x; coefficients are rows of `stride`.
void insert_knot(std::vector<double>& knots, int p, std::vector<double>& c,
                 int stride, double x) {
  const int n = static_cast<int>(knots.size()) - p - 1;
  const auto it = std::upper_bound(knots.begin(), knots.end(), x);
  const int k = static_cast<int>(it - knots.begin()) - 1;
  std::vector<double> q(static_cast<std::size_t>(n + 1) * stride);
  for (int i = 0; i <= n; ++i) {
    for (int d = 0; d < stride; ++d) {
      double val;
      if (i <= k - p) {
        val = c[i * stride + d];
      } else if (i >= k + 1) {
        val = c[(i - 1) * stride + d];
      } else {
        const double a = (x - knots[i]) / (knots[i + p] - knots[i]);
        val = a * c[i * stride + d] + (1.0 - a) * c[(i - 1) * stride + d];
      }
      q[i * stride + d] = val;
    }
  }
  knots.insert(it, x);
  c = std::move(q);
}

}  // namespace

std::vector<double> refine_coefficients(const KnotVector& from,
                                        const KnotVector& to,
                                        std::span<const double> coeffs,
                                        int stride) {
  if (from.degree() != to.degree()) {
    throw std::invalid_argument("refinement requires equal degrees");
  }
  if (static_cast<int>(coeffs.size()) != from.num_basis() * stride) {
    throw std::invalid_argument("coefficient count does not match knot vector");
  }
  std::vector<double> missing;
  const auto& a = from.knots();
  const auto& b = to.knots();
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (i < a.size() && same_knot(a[i], b[j])) {
      ++i;
    } else if (i < a.size() && a[i] < b[j]) {
      throw std::invalid_argument("target knot vector does not contain source");
    } else {
      missing.push_back(b[j]);
    }
  }
  if (i != a.size()) {
    throw std::invalid_argument("target knot vector does not contain source");
  }
  std::vector<double> knots = a;
  std::vector<double> c(coeffs.begin(), coeffs.end());
  for (double x : missing) insert_knot(knots, from.degree(), c, stride, x);
  return c;
}

}  // namespace c2iga
