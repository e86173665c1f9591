#include "c2iga/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace c2iga {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) {
  trim();
}

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : c_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::operator()(double v, int deriv) const {
  double sum = 0.0;
  for (int i = degree(); i >= deriv; --i) {
    double f = 1.0;
    for (int k = 0; k < deriv; ++k) f *= (i - k);
    sum = sum * v + f * c_[i];
  }
  return sum;
}

Polynomial Polynomial::derivative() const {
  std::vector<double> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(i * c_[i]);
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-1.0) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& a) {
  std::vector<double> c = a.c_;
  for (double& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor,
                                                   double tol) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return Polynomial{};
  if (divisor.degree() > degree()) return std::nullopt;
  std::vector<double> rem = c_;
  std::vector<double> quot(degree() - divisor.degree() + 1, 0.0);
  const double lead = divisor.c_.back();
  for (int i = degree() - divisor.degree(); i >= 0; --i) {
    const double q = rem[i + divisor.degree()] / lead;
    quot[i] = q;
    for (int j = 0; j <= divisor.degree(); ++j) rem[i + j] -= q * divisor.c_[j];
  }
  const double scale = std::max(max_abs_coeff(), 1e-300);
  for (int i = 0; i < divisor.degree(); ++i) {
    if (std::abs(rem[i]) > tol * scale) return std::nullopt;
  }
  return Polynomial(std::move(quot));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return (1.0 / c_.back()) * *this;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os.precision(6);
  for (int i = 0; i <= degree(); ++i) {
    if (i > 0) os << (c_[i] < 0 ? " - " : " + ");
    const double a = i > 0 ? std::abs(c_[i]) : c_[i];
    os << a;
    if (i == 1) os << "*v";
    if (i > 1) os << "*v^" << i;
  }
  return os.str();
}

Polynomial linear_gcd(const Polynomial& a, const Polynomial& b, double tol) {
  if (a.degree() > 1 || b.degree() > 1) {
    throw std::invalid_argument("linear_gcd expects polynomials of degree <= 1");
  }
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial::constant(1.0);
  const double ra = -a.coeff(0) / a.coeff(1);
  const double rb = -b.coeff(0) / b.coeff(1);
  if (std::abs(ra - rb) <= tol) return Polynomial({-0.5 * (ra + rb), 1.0});
  return Polynomial::constant(1.0);
}

}  // namespace c2iga
