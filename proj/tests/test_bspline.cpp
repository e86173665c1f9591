#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "c2iga/bspline.hpp"
#include "random_knots.hpp"

using namespace c2iga;

TEST_CASE("uniform knot vector layout") {
  const KnotVector kv = KnotVector::uniform(5, 2, 3);
  CHECK(kv.num_basis() == 5 + 1 + 3 * 3);
  CHECK(kv.num_interior() == 3);
  CHECK(kv.interior()[1] == doctest::Approx(0.5));
  CHECK(kv.multiplicities() == std::vector<int>{3, 3, 3});
  CHECK(kv.first_knot() == doctest::Approx(0.25));
  CHECK(KnotVector::uniform(5, 2, 0).first_knot() == 1.0);
}

TEST_CASE("span lookup from the right and from the left") {
  const KnotVector kv = KnotVector::uniform(3, 1, 1);  // 0^4 .5^2 1^4
  CHECK(kv.find_span(0.0) == 3);
  CHECK(kv.find_span(0.5) == 5);
  CHECK(kv.find_span_left(0.5) == 3);
  CHECK(kv.find_span(1.0) == 5);
  CHECK(kv.find_span_left(0.0) == 3);
}

TEST_CASE("raised knot vector") {
  const KnotVector kv = KnotVector::uniform(5, 2, 3);
  const KnotVector up = kv.raised(2, 2);
  CHECK(up.num_basis() == kv.num_basis() + 2);
  CHECK(up.multiplicities()[1] == 5);
}

TEST_CASE("invalid knot vectors are rejected") {
  CHECK_THROWS(KnotVector(2, {0, 0, 1, 1}));
  CHECK_THROWS(KnotVector::with_regularity(3, 3, std::vector<double>{0.5}));
}

TEST_CASE("right and left limits differ only where the spline jumps") {
  const SplineSpace sp(KnotVector::uniform(3, 1, 1));
  const BasisValues r = sp.eval_basis(0.5, 3);
  const BasisValues l = sp.eval_basis_left(0.5, 3);
  // C^1 at 0.5: values and first derivatives agree, second derivatives jump.
  auto full = [&](const BasisValues& b, int d) {
    std::vector<double> out(sp.dim(), 0.0);
    for (int k = 0; k < b.order; ++k) out[b.first + k] = b(d, k);
    return out;
  };
  for (int d = 0; d < 2; ++d) {
    const auto a = full(r, d), b = full(l, d);
    for (int i = 0; i < sp.dim(); ++i) CHECK(a[i] == doctest::Approx(b[i]));
  }
  const auto a2 = full(r, 2), b2 = full(l, 2);
  double jump = 0.0;
  for (int i = 0; i < sp.dim(); ++i) jump = std::max(jump, std::abs(a2[i] - b2[i]));
  CHECK(jump > 1.0);
}

TEST_CASE("randomized spline kernel properties") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const KnotVector kv = random_knot_vector(rng);
    const SplineSpace sp(kv);
    const int p = kv.degree();
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int s = 0; s < 10; ++s) {
      const double x = unif(rng);
      const BasisValues b = sp.eval_basis(x, std::min(p, 2));
      double sum = 0.0;
      for (int l = 0; l < b.order; ++l) {
        sum += b(0, l);
        CHECK(b(0, l) >= -1e-14);
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
      // local support: N_i vanishes outside [t_i, t_{i+p+1}]
      for (int i = 0; i < sp.dim(); ++i) {
        if (x < kv[i] || x > kv[i + p + 1])
          CHECK(sp.eval_single(i, x) == 0.0);
      }
      // derivatives against central differences away from knots
      const double h = 1e-6;
      bool near_knot = false;
      for (double t : kv.knots()) near_knot = near_knot || std::abs(t - x) < 1e-4;
      if (!near_knot) {
        for (int i = b.first; i < b.first + b.order; ++i) {
          const double fd = (sp.eval_single(i, x + h) - sp.eval_single(i, x - h)) / (2 * h);
          CHECK(std::abs(fd - sp.eval_single(i, x, 1)) < 1e-6 * std::max(1.0, std::abs(fd)));
        }
      }
    }
    // Greville round trip
    std::vector<double> c(sp.dim());
    for (double& ci : c) ci = unif(rng) - 0.5;
    const SplineFunction f(sp, c);
    std::vector<double> samples;
    for (double g : sp.greville()) samples.push_back(f(g));
    const SplineFunction back = interpolate_at_greville(sp, samples);
    for (int i = 0; i < sp.dim(); ++i) CHECK(std::abs(back.coeffs()[i] - c[i]) < 1e-12);
    // knot insertion keeps the function and adds one dimension per knot
    const double tau = 0.3 + 0.4 * unif(rng);
    std::vector<double> finer = kv.knots();
    finer.insert(std::upper_bound(finer.begin(), finer.end(), tau), tau);
    const KnotVector fine(p, finer);
    CHECK(fine.num_basis() == kv.num_basis() + 1);
    const auto cf = refine_coefficients(kv, fine, c);
    const SplineFunction g(SplineSpace(fine), cf);
    for (int s = 0; s <= 20; ++s) {
      const double x = s / 20.0;
      CHECK(g(x) == doctest::Approx(f(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("refinement needs nested knot vectors") {
  const KnotVector a = KnotVector::uniform(3, 1, 1);
  const KnotVector b = KnotVector::uniform(3, 1, 2);
  std::vector<double> c(a.num_basis(), 1.0);
  CHECK_THROWS(refine_coefficients(a, b, c));
}

TEST_CASE("tensor evaluation reproduces products") {
  const SplineSpace sp(KnotVector::uniform(4, 2, 2));
  const int n = sp.dim();
  std::vector<double> cx(n), cy(n), c(n * n);
  for (int i = 0; i < n; ++i) {
    cx[i] = 0.3 * i - 1.0;
    cy[i] = std::sin(i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i * n + j] = cx[i] * cy[j];
  const SplineFunction fx(sp, cx), fy(sp, cy);
  for (double u : {0.0, 0.17, 0.5, 0.91})
    for (double v : {0.05, 0.33, 1.0}) {
      CHECK(eval_tensor(sp, c, u, v) == doctest::Approx(fx(u) * fy(v)));
      CHECK(eval_tensor(sp, c, u, v, 1, 2) == doctest::Approx(fx(u, 1) * fy(v, 2)));
    }
}
