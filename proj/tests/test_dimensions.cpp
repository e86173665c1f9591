#include "doctest.h"
#include "c2iga/dimensions.hpp"
#include "fixtures.hpp"

using namespace c2iga;

TEST_CASE("interior part") {
  CHECK(dim_v1(5, 2, 0) == 36);
  CHECK(dim_v1(5, 2, 31) == 19008);
  CHECK_THROWS(dim_v1(4, 2, 0));
  CHECK_THROWS(dim_v1(6, 4, 0));
}

TEST_CASE("subspace dimension") {
  CHECK(dim_w2(5, 2, 0, 1) == 15);
  CHECK(dim_w2(5, 2, 1, 1) == 18);
}

TEST_CASE("closed form equals the sum of trace dimensions") {
  const std::vector<GluingData> cases{
      fixtures::gluing_a(), fixtures::gluing_b(), fixtures::gluing_one_root(),
      fixtures::gluing_two_roots(), fixtures::gluing_beta_zero(),
      fixtures::gluing_h_nontrivial()};
  for (int p = 5; p <= 7; ++p)
    for (int r = 2; r <= p - 3; ++r)
      for (int k = 0; k <= 3; ++k)
        for (const auto& g : cases) {
          const auto inv = gluing_invariants(g, KnotVector::uniform(p, r, k), r);
          CAPTURE(p);
          CAPTURE(r);
          CAPTURE(k);
          const GammaDims gd = dim_gamma(inv, p, r, k);
          CHECK_NOTHROW(dim_v2(inv, p, r, k));
          CHECK(gd.total() == dim_v2_formula(p, r, k, inv.d_atilde, inv.d_h, inv.z_beta));
        }
}

TEST_CASE("regimes of the closed form at r = 2") {
  for (int p = 5; p <= 6; ++p)
    for (int k = 0; k <= 4; ++k)
      for (int z = 0; z <= 2; ++z) {
        CHECK(dim_v2_formula(p, 2, k, 1, 0, z) == (k + 1) * 3 * p - 11 * k + 2 * z);
        CHECK(dim_v2_formula(p, 2, k, 0, 0, z) == (k + 1) * (3 * p + 3) - 11 * k + 2 * z);
        CHECK(dim_v2_formula(p, 2, k, 0, 1, z) == (k + 1) * (3 * p + 2) - 11 * k + 2 * z);
      }
}
