#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace c2iga {

/// Real polynomial in v with ascending coefficients; trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);
  static Polynomial constant(double c) { return Polynomial({c}); }

  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  double coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0.0;
  }
  const std::vector<double>& coeffs() const { return c_; }
  double max_abs_coeff() const;

  double operator()(double v, int deriv = 0) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& a);
  Polynomial operator-() const { return -1.0 * *this; }

  /// Quotient when `divisor` divides this polynomial up to `tol` (relative
  /// to the largest coefficient); nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor,
                                         double tol = 1e-10) const;

  /// Leading coefficient scaled to one.
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<double> c_;
};

/// Monic gcd of two polynomials of degree at most one. Roots are compared
/// with absolute tolerance `tol` after normalization. gcd(0, a) = monic(a);
/// gcd(0, 0) is reported as the zero polynomial.
Polynomial linear_gcd(const Polynomial& a, const Polynomial& b,
                      double tol = 1e-10);

}  // namespace c2iga
