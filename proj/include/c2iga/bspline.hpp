#pragma once

#include <span>
#include <vector>

namespace c2iga {

/// Open knot vector on [0,1]: boundary knots repeated p+1 times, interior
/// multiplicities between 1 and p.
class KnotVector {
 public:
  KnotVector(int degree, std::vector<double> knots);

  /// T_k^{p,r}: every interior knot repeated p - r times.
  static KnotVector with_regularity(int degree, int regularity,
                                    std::span<const double> interior);
  /// Same, with k equally spaced interior knots i/(k+1).
  static KnotVector uniform(int degree, int regularity, int k);

  int degree() const { return degree_; }
  const std::vector<double>& knots() const { return knots_; }
  double operator[](std::size_t i) const { return knots_[i]; }
  int num_basis() const {
    return static_cast<int>(knots_.size()) - degree_ - 1;
  }

  /// Distinct interior knots tau_1 < ... < tau_k.
  const std::vector<double>& interior() const { return interior_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  int num_interior() const { return static_cast<int>(interior_.size()); }
  /// First distinct knot after 0 (1 when there are no interior knots).
  double first_knot() const { return interior_.empty() ? 1.0 : interior_[0]; }

  /// Raise the multiplicity of interior knot `which` (1-based) by `times`.
  KnotVector raised(int which, int times = 1) const;

  /// Index s with t_s <= x < t_{s+1}; at x = 1 the last nonempty span.
  int find_span(double x) const;
  /// Index s with t_s < x <= t_{s+1} (left limits); at x = 0 the first span.
  int find_span_left(double x) const;

  /// Equality up to 1e-12 per knot (exact for dyadic knots).
  bool operator==(const KnotVector& other) const;

 private:
  int degree_;
  std::vector<double> knots_;
  std::vector<double> interior_;
  std::vector<int> mult_;
};

/// Nonzero B-splines at a point: values(d, l) is the d-th derivative of
/// N_{first + l}.
struct BasisValues {
  int first = 0;
  int order = 0;  // p + 1
  int derivs = 0;
  std::vector<double> data;

  double operator()(int d, int l) const { return data[d * order + l]; }
  double& operator()(int d, int l) { return data[d * order + l]; }
};

class SplineSpace {
 public:
  explicit SplineSpace(KnotVector kv) : kv_(std::move(kv)) {}

  const KnotVector& knots() const { return kv_; }
  int degree() const { return kv_.degree(); }
  int dim() const { return kv_.num_basis(); }

  /// Basis functions nonzero at x with derivatives up to max_deriv.
  BasisValues eval_basis(double x, int max_deriv) const;
  void eval_basis(double x, int max_deriv, BasisValues& out) const;
  /// Same with limits from the left at knots.
  BasisValues eval_basis_left(double x, int max_deriv) const;

  /// Value of derivative `deriv` of the single B-spline N_index at x.
  double eval_single(int index, double x, int deriv = 0) const;

  std::vector<double> greville() const;

  /// Nonempty knot spans [a,b] of the space.
  std::vector<std::pair<double, double>> spans() const;

 private:
  void eval_in_span(int s, double x, int max_deriv, BasisValues& out) const;
  KnotVector kv_;
};

class SplineFunction {
 public:
  SplineFunction(SplineSpace space, std::vector<double> coeffs);

  /// The single B-spline N_index of `space`.
  static SplineFunction bspline(const SplineSpace& space, int index);

  const SplineSpace& space() const { return space_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator()(double x, int deriv = 0) const;

 private:
  SplineSpace space_;
  std::vector<double> coeffs_;
};

/// Collocation at the Greville abscissae of a space, factored once.
/// The collocation matrix is banded and totally positive, so it is
/// factored by banded elimination without pivoting.
class GrevilleInterpolator {
 public:
  explicit GrevilleInterpolator(SplineSpace space);

  const SplineSpace& space() const { return space_; }
  const std::vector<double>& points() const { return xi_; }
  std::vector<double> solve(std::span<const double> samples) const;

 private:
  SplineSpace space_;
  std::vector<double> xi_;
  int n_ = 0;
  int band_ = 0;
  std::vector<double> lu_;  // n x (2*band+1), diagonal at column `band`
};

SplineFunction interpolate_at_greville(const SplineSpace& space,
                                       std::span<const double> samples);

/// Tensor-product evaluation; coeffs[i * n + j] multiplies N_i(u) N_j(v).
double eval_tensor(const SplineSpace& space, std::span<const double> coeffs,
                   double u, double v, int du = 0, int dv = 0);

/// Insert knots so that `from` becomes `to`. Coefficients are stored as
/// `rows = from.num_basis()` blocks of `stride` doubles. Throws if `from` is
/// not contained in `to`.
std::vector<double> refine_coefficients(const KnotVector& from,
                                        const KnotVector& to,
                                        std::span<const double> coeffs,
                                        int stride = 1);

}  // namespace c2iga
