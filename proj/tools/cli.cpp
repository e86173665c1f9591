#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "c2iga/basis.hpp"
#include "c2iga/c2_check.hpp"
#include "c2iga/dimensions.hpp"
#include "c2iga/fit.hpp"
#include "c2iga/io.hpp"
#include "c2iga/nullspace_oracle.hpp"
#include "c2iga/scalar_field.hpp"
#include "c2iga/study.hpp"

namespace c2iga::cli {
namespace {

struct Flags {
  std::string geometry;
  std::string out;
  std::string space = "v2";
  std::string function = kDefaultField;
  std::string weight = "jacobian";
  std::string policy = "centered";
  int levels = 5;
  int samples = 101;
  int degree = 5;
  int regularity = 2;
  int k = 0;
  int quad_points = 0;
  double tol = 1e-9;
  bool oracle = false;
  bool no_cond = false;
  bool serial = false;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SpaceKind parse_space(const std::string& s) {
  if (s == "v2") return SpaceKind::V2;
  if (s == "w2") return SpaceKind::W2;
  throw ValidationError("unknown space '" + s + "' (expected v2 or w2)");
}

SelectionPolicy parse_policy(const std::string& s) {
  if (s == "smallest") return SelectionPolicy::SmallestIndex;
  if (s == "centered") return SelectionPolicy::Centered;
  throw ValidationError("unknown policy '" + s + "'");
}

/// Geometry plus gluing data, taken from the file or, failing that, from
/// the bilinear interpolant of the patch corners. Either way the geometry
/// must be bilinear-like with respect to it.
struct Loaded {
  TwoPatchGeometry geometry;
  GluingData gluing;
  bool gluing_from_file;
};

Loaded load(const Flags& f, bool require_bilinear_like = true) {
  if (f.geometry.empty()) throw ValidationError("--geometry is required");
  GeometryFile file = read_geometry(f.geometry);
  file.geometry.validate();
  const bool from_file = file.gluing.has_value();
  GluingData g = from_file ? *file.gluing
                           : gluing_from_bilinear(bilinear_from_vertices(file.geometry));
  if (!verify_sign_condition(g))
    throw ValidationError("gluing data violate the sign condition");
  if (require_bilinear_like) {
    const auto rep = verify_bilinear_like(file.geometry, g, f.samples, 1e-9);
    if (!rep.passed) {
      std::ostringstream os;
      os << "geometry is not bilinear-like: residuals " << rep.interface << " "
         << rep.first_order << " " << rep.second_order << " (worst at v="
         << rep.worst_v << ")";
      throw ValidationError(os.str());
    }
  }
  return {std::move(file.geometry), g, from_file};
}

KnotVector base_knots(const Flags& f) {
  return KnotVector::uniform(f.degree, f.regularity, f.k);
}

int cmd_dim(const Flags& f, std::ostream& out) {
  const Loaded in = load(f);
  const KnotVector base = base_knots(f);
  const auto inv = gluing_invariants(in.gluing, base, f.regularity);
  const int p = f.degree, r = f.regularity, k = f.k;
  const int v1 = dim_v1(p, r, k);
  const GammaDims gd = dim_gamma(inv, p, r, k);
  const int v2 = dim_v2(inv, p, r, k);
  const int w2 = dim_w2(p, r, k, inv.d_alpha);
  out << "dim V1^2=" << v1 << " dim V2^2=" << v2 << " dim W2^2=" << w2 << "\n";
  out << "dim Gamma0=" << gd.gamma0 << " dim Gamma1=" << gd.gamma1
      << " dim Gamma2=" << gd.gamma2 << "\n";
  out << "dim V^2=" << v1 + v2 << " dim W^2=" << v1 + w2 << "\n";
  out << "q=" << inv.q.to_string() << " h=" << inv.h.to_string()
      << " d_atilde=" << inv.d_atilde << " d_h=" << inv.d_h
      << " z_beta=" << inv.z_beta << " branch=" << branch_name(inv.branch)
      << "\n";
  return kOk;
}

int cmd_gluing(const Flags& f, std::ostream& out) {
  const Loaded in = load(f);
  const auto& g = in.gluing;
  const auto inv = gluing_invariants(g, base_knots(f), f.regularity);
  out << "source=" << (in.gluing_from_file ? "file" : "vertices") << "\n";
  out << "alpha_L=" << g.alpha_L.to_string() << "\n";
  out << "alpha_R=" << g.alpha_R.to_string() << "\n";
  out << "beta_L=" << g.beta_L.to_string() << "\n";
  out << "beta_R=" << g.beta_R.to_string() << "\n";
  out << "beta=" << inv.beta.to_string() << "\n";
  out << "q=" << inv.q.to_string() << " h=" << inv.h.to_string() << "\n";
  out << "atilde_L=" << inv.atilde_L.to_string()
      << " atilde_R=" << inv.atilde_R.to_string() << "\n";
  out << "d_alpha=" << inv.d_alpha << " d_atilde=" << inv.d_atilde
      << " d_h=" << inv.d_h << " z_beta=" << inv.z_beta
      << " branch=" << branch_name(inv.branch) << "\n";
  return kOk;
}

SmoothBasis make_basis(const Flags& f, const GluingData& g) {
  const KnotVector base = base_knots(f);
  if (parse_space(f.space) == SpaceKind::W2)
    return build_basis_w2(g, base, f.regularity);
  const auto inv = gluing_invariants(g, base, f.regularity);
  return build_basis_v2(g, inv, base, f.regularity, parse_policy(f.policy));
}

int cmd_basis(const Flags& f, std::ostream& out) {
  const Loaded in = load(f);
  const SmoothBasis basis = make_basis(f, in.gluing);
  if (f.out.empty()) {
    write_basis_jsonl(out, basis);
  } else {
    std::ofstream os(f.out);
    if (!os) throw ValidationError("cannot write " + f.out);
    write_basis_jsonl(os, basis);
    out << "wrote " << basis.size() << " basis functions to " << f.out << "\n";
  }
  return kOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const Loaded in = load(f, false);
  const auto& g = in.gluing;
  bool ok = true;

  const bool sign = verify_sign_condition(g);
  out << "sign_condition=" << (sign ? "pass" : "fail") << "\n";
  ok = ok && sign;

  const auto bl = verify_bilinear_like(in.geometry, g, f.samples, f.tol);
  out << "bilinear_like interface=" << bl.interface
      << " first_order=" << bl.first_order
      << " second_order=" << bl.second_order << " worst_v=" << bl.worst_v
      << " " << (bl.passed ? "pass" : "fail") << "\n";
  ok = ok && bl.passed;

  // The C^2 check needs basis and geometry on one tensor space.
  const KnotVector base = base_knots(f);
  std::optional<TwoPatchGeometry> geom;
  if (in.geometry.space().knots() == base) {
    geom = in.geometry;
  } else if (in.geometry.degree() == f.degree) {
    geom = in.geometry.refined(base, f.regularity);
  }
  if (geom && bl.passed) {
    const SmoothBasis basis = make_basis(f, g);
    double worst[3] = {0, 0, 0};
    int worst_m = -1;
    bool c2 = true;
    for (int m = 0; m < basis.size(); ++m) {
      const auto L = basis.grid(m, Side::Left);
      const auto R = basis.grid(m, Side::Right);
      const auto rep = verify_c2_at_interface(*geom, L, R, f.samples, f.tol);
      if (!rep.passed && c2) worst_m = m;
      c2 = c2 && rep.passed;
      const double mx = std::max({rep.value, rep.gradient, rep.hessian});
      if (worst_m < 0 && mx > std::max({worst[0], worst[1], worst[2]}))
        worst_m = m;
      worst[0] = std::max(worst[0], rep.value);
      worst[1] = std::max(worst[1], rep.gradient);
      worst[2] = std::max(worst[2], rep.hessian);
    }
    out << "c2_interface basis=" << basis.size() << " value=" << worst[0]
        << " gradient=" << worst[1] << " hessian=" << worst[2];
    if (worst_m >= 0)
      out << " worst=" << family_name(basis.triplets[worst_m].family) << ":"
          << basis.triplets[worst_m].j;
    out << " " << (c2 ? "pass" : "fail") << "\n";
    ok = ok && c2;
  } else if (!geom) {
    out << "c2_interface skipped: geometry space does not embed in the basis "
           "space\n";
  }

  if (f.oracle) {
    const auto inv = gluing_invariants(g, base, f.regularity);
    const NullspaceReport rep = constraint_nullspace(g, base);
    if (!rep.determinate) {
      out << "oracle indeterminate gap=" << rep.gap << "\n";
      return kIndeterminate;
    }
    const int formula = dim_v2(inv, f.degree, f.regularity, f.k);
    const bool match = rep.dimension == formula;
    out << "oracle=" << rep.dimension << " formula=" << formula << " "
        << (match ? "OK" : "MISMATCH") << " gap=" << rep.gap << "\n";
    ok = ok && match;
  }
  return ok ? kOk : kValidation;
}

FitWeight parse_weight(const std::string& s) {
  if (s == "jacobian") return FitWeight::ReferenceJacobian;
  if (s == "initial") return FitWeight::InitialJacobian;
  if (s == "parametric") return FitWeight::Parametric;
  throw ValidationError("unknown weight '" + s + "'");
}

int cmd_fit(const Flags& f, std::ostream& out) {
  if (f.geometry.empty()) throw ValidationError("--geometry is required");
  GeometryFile file = read_geometry(f.geometry);
  file.geometry.validate();
  const TwoPatchGeometry fhat = bilinear_from_vertices(file.geometry);
  const FitResult fit =
      fit_bilinear_like(file.geometry, fhat, parse_weight(f.weight), f.degree,
                        f.regularity, f.quad_points);
  out << "epsilon=" << fit.epsilon << "\n";
  if (!f.out.empty()) {
    write_geometry(f.out, {fit.fitted, fit.gluing});
    out << "wrote " << f.out << "\n";
  }
  return kOk;
}

int cmd_bilinear(const Flags& f, std::ostream& out) {
  if (f.geometry.empty()) throw ValidationError("--geometry is required");
  GeometryFile file = read_geometry(f.geometry);
  file.geometry.validate();
  const TwoPatchGeometry fhat = bilinear_from_vertices(file.geometry);
  const GluingData g = gluing_from_bilinear(fhat);
  GeometryFile result{fhat, g};
  if (f.out.empty()) {
    out << serialize_geometry(result);
  } else {
    write_geometry(f.out, result);
    out << "wrote " << f.out << "\n";
  }
  return kOk;
}

int cmd_table2(const Flags& f, std::ostream& out) {
  const Loaded in = load(f);
  const ScalarField field = ScalarField::lookup(f.function);
  const PointFunction fn = [&field](Side, double, double,
                                    const Eigen::Vector2d& x) {
    return field(x.x(), x.y());
  };
  StudyOptions opt;
  opt.levels = f.levels;
  opt.space = parse_space(f.space);
  opt.degree = f.degree;
  opt.regularity = f.regularity;
  opt.quad_points = f.quad_points;
  opt.condition_numbers = !f.no_cond;
  opt.policy = parse_policy(f.policy);
  opt.backend = f.serial ? Backend::Serial : Backend::Parallel;

  std::ofstream file;
  std::ostream* csv = nullptr;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) throw ValidationError("cannot write " + f.out);
    csv = &file;
    write_csv_header(*csv);
  }
  out << std::setw(3) << "L" << std::setw(8) << "dim V1" << std::setw(8)
      << "dim " << (opt.space == SpaceKind::V2 ? "V2" : "W2") << std::setw(14)
      << "error" << std::setw(10) << "e.c.r." << std::setw(14) << "kappa"
      << std::setw(12) << "c.r." << "\n";
  const auto row = [&](const ApproxReport& r) {
    if (csv) {
      write_csv_row(*csv, r);
      csv->flush();
    }
    out << std::setw(3) << r.level << std::setw(8) << r.dim_v1 << std::setw(11)
        << r.dim_interface << std::setw(14) << r.rel_error << std::setw(10)
        << r.rate << std::setw(14) << r.cond << std::setw(12) << r.cond_rate
        << "\n";
  };
  try {
    convergence_study(in.geometry, in.gluing, fn, opt, row);
  } catch (const std::exception& e) {
    if (csv) *csv << "error," << '"' << e.what() << '"' << "\n";
    throw;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"C2-smooth isogeometric spaces on two-patch domains", "c2iga"};
  app.require_subcommand(1);
  Flags f;

  const auto add_geometry = [&](CLI::App* c) {
    c->add_option("--geometry", f.geometry, "geometry JSON file")->required();
  };
  const auto add_space = [&](CLI::App* c) {
    c->add_option("--degree", f.degree, "spline degree p");
    c->add_option("--regularity", f.regularity, "spline regularity r");
    c->add_option("--k", f.k, "number of uniform interior knots");
    c->add_option("--samples", f.samples, "interface samples");
  };

  auto* dim = app.add_subcommand("dim", "dimension report");
  add_geometry(dim);
  add_space(dim);
  auto* gl = app.add_subcommand("gluing", "gluing data and invariants");
  add_geometry(gl);
  add_space(gl);
  auto* basis = app.add_subcommand("basis", "export the interface basis");
  add_geometry(basis);
  add_space(basis);
  basis->add_option("--space", f.space, "v2 or w2");
  basis->add_option("--policy", f.policy, "smallest or centered");
  basis->add_option("--out", f.out, "JSON-lines output");
  auto* verify = app.add_subcommand("verify", "check smoothness conditions");
  add_geometry(verify);
  add_space(verify);
  verify->add_option("--space", f.space, "v2 or w2");
  verify->add_option("--tol", f.tol, "tolerance");
  verify->add_flag("--oracle", f.oracle, "compare with the constraint rank");
  auto* fit = app.add_subcommand("fit", "fit a bilinear-like geometry");
  add_geometry(fit);
  fit->add_option("--out", f.out, "fitted geometry JSON");
  fit->add_option("--weight", f.weight, "jacobian, initial or parametric");
  fit->add_option("--quad-points", f.quad_points, "Gauss points per cell");
  auto* bil = app.add_subcommand("bilinear", "bilinear reference geometry");
  add_geometry(bil);
  bil->add_option("--out", f.out, "output JSON");
  auto* t2 = app.add_subcommand("table2", "convergence table");
  add_geometry(t2);
  t2->add_option("--space", f.space, "v2 or w2");
  t2->add_option("--levels", f.levels, "finest level L");
  t2->add_option("--out", f.out, "CSV output");
  t2->add_option("--function", f.function, "field name or expression");
  t2->add_option("--policy", f.policy, "smallest or centered");
  t2->add_option("--quad-points", f.quad_points, "Gauss points per cell");
  t2->add_flag("--no-cond", f.no_cond, "skip condition numbers");
  t2->add_flag("--serial", f.serial, "serial assembly kernels");
  t2->add_option("--samples", f.samples, "interface samples");

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kValidation;
  }

  out << std::setprecision(6);
  try {
    if (*dim) return cmd_dim(f, out);
    if (*gl) return cmd_gluing(f, out);
    if (*basis) return cmd_basis(f, out);
    if (*verify) return cmd_verify(f, out);
    if (*fit) return cmd_fit(f, out);
    if (*bil) return cmd_bilinear(f, out);
    if (*t2) return cmd_table2(f, out);
  } catch (const IndeterminateRank& e) {
    err << "indeterminate: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}

}  // namespace c2iga::cli
