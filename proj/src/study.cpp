#include "c2iga/study.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "c2iga/conditioning.hpp"
#include "c2iga/dimensions.hpp"

namespace c2iga {

const char* space_name(SpaceKind s) { return s == SpaceKind::V2 ? "v2" : "w2"; }

LevelSpace build_level_space(const GluingData& g, int level,
                             const StudyOptions& opt) {
  const int k = (1 << level) - 1;
  KnotVector knots = KnotVector::uniform(opt.degree, opt.regularity, k);
  SmoothBasis basis =
      opt.space == SpaceKind::V2
          ? build_basis_v2(g, gluing_invariants(g, knots, opt.regularity), knots,
                           opt.regularity, opt.policy)
          : build_basis_w2(g, knots, opt.regularity);
  CoefficientMatrix C = coefficient_matrix(basis, true);
  return {std::move(knots), std::move(basis), std::move(C)};
}

std::vector<ApproxReport> convergence_study(
    const TwoPatchGeometry& geom, const GluingData& g, const PointFunction& f,
    const StudyOptions& opt,
    const std::function<void(const ApproxReport&)>& on_level) {
  std::vector<ApproxReport> out;
  const int qp = opt.quad_points > 0 ? opt.quad_points : 2 * (opt.degree + 1);
  for (int level = 0; level <= opt.levels; ++level) {
    const LevelSpace ls = build_level_space(g, level, opt);
    const SplineSpace space(ls.knots);
    const bool refine = geom.degree() == opt.degree &&
                        geom.num_interior_knots() == 0;
    const TwoPatchGeometry G =
        refine ? geom.refined(ls.knots, opt.regularity) : geom;
    const QuadratureRule rule = gauss_rule(qp, space.spans());
    const ProjectionResult pr = l2_project(G, space, ls.C, f, rule, opt.backend);

    ApproxReport r;
    r.level = level;
    r.k = ls.knots.num_interior();
    r.dim_v1 = dim_v1(opt.degree, opt.regularity, r.k);
    r.dim_interface = ls.interface.size();
    r.rel_error = pr.rel_error;
    r.cond = opt.condition_numbers
                 ? scaled_condition_number(pr.mass, opt.dense_limit)
                 : std::numeric_limits<double>::quiet_NaN();
    if (out.empty()) {
      r.rate = r.cond_rate = std::numeric_limits<double>::quiet_NaN();
    } else {
      r.rate = std::log2(out.back().rel_error / r.rel_error);
      r.cond_rate = std::log2(out.back().cond / r.cond);
    }
    out.push_back(r);
    if (on_level) on_level(r);
  }
  return out;
}

void write_csv_header(std::ostream& os) {
  os << "L,dim_V1,dim_V2_or_W2,rel_L2_err,ecr,cond,cond_rate\n";
}

void write_csv_row(std::ostream& os, const ApproxReport& r) {
  auto num = [&](double x) {
    if (std::isnan(x)) {
      os << "";
    } else {
      os << std::setprecision(17) << x;
    }
  };
  os << r.level << ',' << r.dim_v1 << ',' << r.dim_interface << ',';
  num(r.rel_error);
  os << ',';
  num(r.rate);
  os << ',';
  num(r.cond);
  os << ',';
  num(r.cond_rate);
  os << '\n';
}

}  // namespace c2iga
