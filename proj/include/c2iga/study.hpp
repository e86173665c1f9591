#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "c2iga/basis.hpp"
#include "c2iga/gluing.hpp"
#include "c2iga/projection.hpp"

namespace c2iga {

enum class SpaceKind { V2, W2 };
const char* space_name(SpaceKind s);

/// One row of a convergence table. Rates are NaN on the first level.
struct ApproxReport {
  int level = 0;
  int k = 0;
  int dim_v1 = 0;
  int dim_interface = 0;  // dim V_2^2 or dim W_2^2
  double rel_error = 0.0;
  double rate = 0.0;
  double cond = 0.0;
  double cond_rate = 0.0;
};

struct StudyOptions {
  int levels = 5;
  SpaceKind space = SpaceKind::V2;
  int degree = 5;
  int regularity = 2;
  int quad_points = 0;  // per cell and direction; 0 means 2 (degree + 1)
  bool condition_numbers = true;
  int dense_limit = 6000;
  SelectionPolicy policy = SelectionPolicy::Centered;
  Backend backend = Backend::Parallel;
};

/// Full space (interior part plus V_2^2 or W_2^2) on k = 2^level - 1 uniform
/// interior knots, as rows over tensor B-splines.
struct LevelSpace {
  KnotVector knots;
  SmoothBasis interface;
  CoefficientMatrix C;
};
LevelSpace build_level_space(const GluingData& g, int level,
                             const StudyOptions& opt);

/// L2 projection of f at levels 0..opt.levels on the fixed geometry `geom`
/// (refined by knot insertion when its degree matches). `on_level` is
/// called after every finished level.
std::vector<ApproxReport> convergence_study(
    const TwoPatchGeometry& geom, const GluingData& g, const PointFunction& f,
    const StudyOptions& opt,
    const std::function<void(const ApproxReport&)>& on_level = {});

/// Columns L, dim_V1, dim_V2_or_W2, rel_L2_err, ecr, cond, cond_rate.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const ApproxReport& r);

}  // namespace c2iga
