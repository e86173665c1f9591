#include <cmath>

#include "doctest.h"
#include "c2iga/gluing.hpp"
#include "fixtures.hpp"

using namespace c2iga;

namespace {

void check_poly(const Polynomial& p, std::vector<double> expected) {
  for (int i = 0; i < static_cast<int>(expected.size()); ++i)
    CHECK(p.coeff(i) == doctest::Approx(expected[i]).epsilon(1e-12));
  CHECK(p.degree() <= static_cast<int>(expected.size()) - 1);
}

}  // namespace

TEST_CASE("gluing data of the bilinear references") {
  for (auto [name, ref] : {std::pair{"a", fixtures::gluing_a()},
                           std::pair{"b", fixtures::gluing_b()}}) {
    CAPTURE(name);
    const auto file = fixtures::load(std::string("bilinear_") + name + ".json");
    const GluingData g = gluing_from_bilinear(file.geometry);
    check_poly(g.alpha_L, ref.alpha_L.coeffs());
    check_poly(g.alpha_R, ref.alpha_R.coeffs());
    check_poly(g.beta_L, ref.beta_L.coeffs());
    check_poly(g.beta_R, ref.beta_R.coeffs());
    CHECK(verify_sign_condition(g));
  }
}

TEST_CASE("beta of the bundled geometries") {
  check_poly(beta_from_gluing(fixtures::gluing_a()), {15.0 / 6, -32.0 / 6, 1.0 / 6});
  check_poly(beta_from_gluing(fixtures::gluing_b()), {-36, 36, -9});
}

TEST_CASE("sign condition") {
  CHECK_FALSE(verify_sign_condition({{1}, {1}, {}, {}}));
  CHECK_FALSE(verify_sign_condition({{-0.5, 1}, {1}, {}, {}}));  // root inside
  CHECK(verify_sign_condition({{-1, -1}, {1}, {}, {}}));
}

TEST_CASE("invariants for geometry (a)") {
  const auto inv = gluing_invariants(fixtures::gluing_a(), KnotVector::uniform(5, 2, 3), 2);
  CHECK(inv.q.degree() == 0);
  CHECK(inv.h.degree() == 0);
  CHECK(inv.d_alpha == 1);
  CHECK(inv.d_atilde == 1);
  CHECK(inv.d_h == 0);
  CHECK(inv.z_beta == 0);
  CHECK(inv.branch == TildeBranch::NoRoots);
  CHECK(inv.ttilde.regularity == std::vector<int>{3, 3, 3});
}

TEST_CASE("invariants for geometry (b)") {
  const auto inv = gluing_invariants(fixtures::gluing_b(), KnotVector::uniform(5, 2, 1), 2);
  check_poly(inv.q, {-2, 1});
  CHECK(inv.h.degree() == 0);
  CHECK(inv.d_atilde == 0);
  CHECK(inv.d_h == 0);
  CHECK(inv.z_beta == 0);
  check_poly(inv.atilde_L, {9});
  check_poly(inv.atilde_R, {-9});
}

TEST_CASE("invariants with roots of beta on knots") {
  const KnotVector base = KnotVector::uniform(5, 2, 3);  // knots 1/4, 1/2, 3/4
  const auto one = gluing_invariants(fixtures::gluing_one_root(), base, 2);
  CHECK(one.z_beta == 1);
  CHECK(one.z_beta_set == std::vector<int>{2});
  CHECK(one.branch == TildeBranch::OneRoot);
  CHECK(one.ttilde.regularity == std::vector<int>{3, 2, 3});

  const auto two = gluing_invariants(fixtures::gluing_two_roots(), base, 2);
  CHECK(two.z_beta == 2);
  CHECK(two.z_beta_set == std::vector<int>{1, 3});
  CHECK(two.branch == TildeBranch::TwoRoots);

  const auto zero = gluing_invariants(fixtures::gluing_beta_zero(), base, 2);
  CHECK(zero.beta_zero);
  CHECK(zero.z_beta == 3);
  CHECK(zero.branch == TildeBranch::BetaZero);
  CHECK(zero.ttilde.regularity == std::vector<int>{2, 2, 2});

  const auto h = gluing_invariants(fixtures::gluing_h_nontrivial(), base, 2);
  CHECK(h.d_h == 1);
  check_poly(h.h, {-2, 1});
}

TEST_CASE("bilinear-like check on the bundled geometries") {
  for (const char* name : {"printed_a.json", "printed_b.json", "fitted_a.json", "fitted_b.json"}) {
    CAPTURE(name);
    const auto file = fixtures::load(name);
    REQUIRE(file.gluing.has_value());
    const auto rep = verify_bilinear_like(file.geometry, *file.gluing, 50, 1e-9);
    CHECK(rep.passed);
    CHECK(rep.first_order < 1e-12);
    CHECK(rep.second_order < 1e-12);
  }
}

TEST_CASE("a perturbed control point breaks the bilinear-like conditions") {
  auto file = fixtures::load("printed_a.json");
  auto left = file.geometry.control(Side::Left);
  const int n = file.geometry.space().dim();
  left[1 * n + 2] += Eigen::Vector2d(0.1, 0.0);
  const TwoPatchGeometry bad(file.geometry.space(), file.geometry.regularity(), left,
                             file.geometry.control(Side::Right));
  const auto rep = verify_bilinear_like(bad, *file.gluing, 50, 1e-9);
  CHECK_FALSE(rep.passed);
  CHECK(rep.first_order > 1e-3);
  CHECK(rep.worst_v > 0.0);
  CHECK(rep.worst_v < 1.0);
}

TEST_CASE("initial geometries are regular and not bilinear-like") {
  for (const char* name : {"initial_a.json", "initial_b.json"}) {
    const auto file = fixtures::load(name);
    CHECK_NOTHROW(file.geometry.validate());
    const GluingData g = gluing_from_bilinear(bilinear_from_vertices(file.geometry));
    CHECK_FALSE(verify_bilinear_like(file.geometry, g, 50, 1e-9).passed);
  }
}
