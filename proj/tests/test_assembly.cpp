#include <cmath>

#include <Eigen/Dense>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "doctest.h"
#include "c2iga/conditioning.hpp"
#include "c2iga/projection.hpp"
#include "c2iga/scalar_field.hpp"
#include "c2iga/study.hpp"
#include "fixtures.hpp"

using namespace c2iga;

namespace {

PointFunction wave() {
  return [](Side, double, double, const Eigen::Vector2d& x) {
    return 2 * std::cos(2 * x.x()) * std::sin(2 * x.y());
  };
}

}  // namespace

TEST_CASE("gauss rule integrates polynomials on every cell") {
  const QuadratureRule rule = gauss_rule(4, {{0.0, 0.25}, {0.25, 1.0}});
  double s = 0.0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q)
    s += rule.weights[q] * std::pow(rule.nodes[q], 7);
  CHECK(s == doctest::Approx(1.0 / 8).epsilon(1e-14));
  CHECK(rule.num_cells() == 2);
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
  const auto file = fixtures::load("printed_b.json");
  const SplineSpace sp(KnotVector::uniform(5, 2, 3));
  const TwoPatchGeometry geom = file.geometry.refined(sp.knots(), 2);
  const QuadratureRule rule = gauss_rule(8, sp.spans());
  const int n = sp.dim();
  std::vector<double> coeffs(n * n);
  for (int i = 0; i < n * n; ++i) coeffs[i] = std::sin(0.1 * i);
  for (Side s : kSides) {
    const Eigen::MatrixXd a = Eigen::MatrixXd(kernels_serial::tensor_gram(geom, s, sp, rule));
    const Eigen::MatrixXd b = Eigen::MatrixXd(kernels_omp::tensor_gram(geom, s, sp, rule));
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-14 * a.cwiseAbs().maxCoeff());
    const Eigen::VectorXd la = kernels_serial::tensor_load(geom, s, sp, wave(), rule);
    const Eigen::VectorXd lb = kernels_omp::tensor_load(geom, s, sp, wave(), rule);
    CHECK((la - lb).cwiseAbs().maxCoeff() <= 1e-14 * la.cwiseAbs().maxCoeff());
    const auto ea = kernels_serial::squared_error(geom, s, sp, coeffs, wave(), rule);
    const auto eb = kernels_omp::squared_error(geom, s, sp, coeffs, wave(), rule);
    CHECK(ea.first == doctest::Approx(eb.first).epsilon(1e-13));
    CHECK(ea.second == doctest::Approx(eb.second).epsilon(1e-13));
  }
}

TEST_CASE("parallel assembly does not depend on the thread count") {
  const auto file = fixtures::load("printed_a.json");
  const SplineSpace sp(KnotVector::uniform(5, 2, 1));
  const TwoPatchGeometry geom = file.geometry.refined(sp.knots(), 2);
  const QuadratureRule rule = gauss_rule(6, sp.spans());
  const Eigen::MatrixXd a = Eigen::MatrixXd(kernels_omp::tensor_gram(geom, Side::Left, sp, rule));
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
#endif
  const Eigen::MatrixXd b = Eigen::MatrixXd(kernels_omp::tensor_gram(geom, Side::Left, sp, rule));
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("projection reproduces a function in the space") {
  // x1 on a bilinear domain pulls back to a bilinear spline, which is C2.
  const auto file = fixtures::load("bilinear_a.json");
  const GluingData g = gluing_from_bilinear(file.geometry);
  StudyOptions opt;
  opt.levels = 1;
  const LevelSpace ls = build_level_space(g, 1, opt);
  const SplineSpace sp(ls.knots);
  const QuadratureRule rule = gauss_rule(8, sp.spans());
  const PointFunction x1 = [](Side, double, double, const Eigen::Vector2d& x) { return x.x(); };
  const auto res = l2_project(file.geometry, sp, ls.C, x1, rule);
  CHECK(res.rel_error < 1e-10);
}

TEST_CASE("galerkin orthogonality and quadrature convergence") {
  const auto file = fixtures::load("printed_a.json");
  StudyOptions opt;
  const LevelSpace ls = build_level_space(*file.gluing, 1, opt);
  const SplineSpace sp(ls.knots);
  const TwoPatchGeometry geom = file.geometry.refined(ls.knots, 2);
  const QuadratureRule rule = gauss_rule(12, sp.spans());
  const auto res = l2_project(geom, sp, ls.C, wave(), rule);
  const Eigen::VectorXd resid = res.mass * res.coeffs - res.load;
  CHECK(resid.norm() < 1e-9 * res.load.norm());

  // mass entries with doubled points
  const auto m2 = assemble_mass(geom, sp, ls.C, gauss_rule(24, sp.spans()));
  const Eigen::MatrixXd d = Eigen::MatrixXd(res.mass) - Eigen::MatrixXd(m2);
  CHECK(d.cwiseAbs().maxCoeff() < 1e-10 * Eigen::MatrixXd(m2).cwiseAbs().maxCoeff());
}

TEST_CASE("error decreases under refinement") {
  const auto file = fixtures::load("printed_b.json");
  StudyOptions opt;
  opt.levels = 3;
  opt.condition_numbers = false;
  const auto rows = convergence_study(file.geometry, *file.gluing, wave(), opt);
  REQUIRE(rows.size() == 4);
  for (std::size_t l = 1; l < rows.size(); ++l) CHECK(rows[l].rel_error < rows[l - 1].rel_error);
  CHECK(std::isnan(rows[0].rate));
}

TEST_CASE("dense and Lanczos condition numbers agree") {
  const auto file = fixtures::load("printed_a.json");
  StudyOptions opt;
  const LevelSpace ls = build_level_space(*file.gluing, 2, opt);
  const SplineSpace sp(ls.knots);
  const TwoPatchGeometry geom = file.geometry.refined(ls.knots, 2);
  const auto M = assemble_mass(geom, sp, ls.C, gauss_rule(12, sp.spans()));
  const double dense = scaled_condition_dense(M);
  const double lanczos = scaled_condition_lanczos(M, 1e-8);
  CHECK(lanczos == doctest::Approx(dense).epsilon(1e-5));
  const Eigen::SparseMatrix<double> A = diagonally_scaled(M);
  for (int i = 0; i < A.rows(); ++i) CHECK(A.coeff(i, i) == doctest::Approx(1.0));
}

TEST_CASE("csv rows") {
  std::ostringstream os;
  write_csv_header(os);
  ApproxReport r;
  r.level = 0;
  r.dim_v1 = 36;
  r.dim_interface = 15;
  r.rel_error = 0.1;
  r.rate = std::nan("");
  r.cond = 100;
  r.cond_rate = std::nan("");
  write_csv_row(os, r);
  CHECK(os.str() == "L,dim_V1,dim_V2_or_W2,rel_L2_err,ecr,cond,cond_rate\n"
                    "0,36,15,0.10000000000000001,,100,\n");
}
