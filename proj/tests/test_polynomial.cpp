#include "doctest.h"
#include "c2iga/polynomial.hpp"

using namespace c2iga;

TEST_CASE("polynomial arithmetic and evaluation") {
  const Polynomial a{1, 2};       // 1 + 2v
  const Polynomial b{-3, 0, 1};   // -3 + v^2
  const Polynomial c = a * b;
  CHECK(c.degree() == 3);
  CHECK(c(2.0) == doctest::Approx(a(2.0) * b(2.0)));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(c(0.5, 1) == doctest::Approx(c.derivative()(0.5)));
  CHECK(b(3.0, 2) == doctest::Approx(2.0));
  CHECK((-a)(1.0) == doctest::Approx(-3.0));
}

TEST_CASE("exact division") {
  const Polynomial q{-2, 1};
  const Polynomial p = q * Polynomial{5, 3};
  const auto d = p.divide_exact(q);
  REQUIRE(d.has_value());
  CHECK(d->coeff(0) == doctest::Approx(5.0));
  CHECK(d->coeff(1) == doctest::Approx(3.0));
  CHECK_FALSE((p + Polynomial{1e-3}).divide_exact(q).has_value());
  CHECK(Polynomial().divide_exact(q).has_value());
}

TEST_CASE("gcd of linear polynomials") {
  CHECK(linear_gcd(Polynomial{-18, 9}, Polynomial{18, -9}).coeffs() ==
        std::vector<double>{-2, 1});
  CHECK(linear_gcd(Polynomial{-9, -1}, Polynomial{10.5, -1.5}).degree() == 0);
  CHECK(linear_gcd(Polynomial{3}, Polynomial{1, 1}).degree() == 0);
  CHECK(linear_gcd(Polynomial(), Polynomial{2, 4}).coeffs() ==
        std::vector<double>{0.5, 1});
}
