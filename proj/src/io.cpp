#include "c2iga/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace c2iga {

using nlohmann::json;

namespace {

Polynomial read_linear(const json& j, const char* key) {
  const auto& arr = j.at(key);
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument(std::string("gluing.") + key +
                                " must be a nonempty array");
  return Polynomial(arr.get<std::vector<double>>());
}

json write_poly(const Polynomial& p) {
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  if (c.empty()) c.push_back(0.0);
  return c;
}

TwoPatchGeometry::ControlGrid read_grid(const json& patch, int n,
                                        const char* side) {
  const auto& pts = patch.at("control_points");
  if (!pts.is_array() || static_cast<int>(pts.size()) != n * n)
    throw std::invalid_argument(std::string("patch ") + side + " needs " +
                                std::to_string(n * n) + " control points");
  TwoPatchGeometry::ControlGrid grid;
  grid.reserve(pts.size());
  for (const auto& pt : pts) {
    if (!pt.is_array() || pt.size() != 2)
      throw std::invalid_argument(std::string("patch ") + side +
                                  ": control points are [x, y] pairs");
    grid.emplace_back(pt[0].get<double>(), pt[1].get<double>());
  }
  return grid;
}

}  // namespace

GeometryFile parse_geometry(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    const int p = doc.at("degree").get<int>();
    const int r = doc.at("regularity").get<int>();
    const auto interior =
        doc.value("knots_interior", json::array()).get<std::vector<double>>();
    if (p < 1) throw std::invalid_argument("degree must be positive");
    if (r < 0 || r >= p)
      throw std::invalid_argument("regularity must lie in [0, degree)");
    SplineSpace space(KnotVector::with_regularity(p, r, interior));
    const int n = space.dim();
    const auto& patches = doc.at("patches");
    auto left = read_grid(patches.at("L"), n, "L");
    auto right = read_grid(patches.at("R"), n, "R");
    GeometryFile out{TwoPatchGeometry(std::move(space), r, std::move(left),
                                      std::move(right)),
                     std::nullopt};
    if (doc.contains("gluing")) {
      const auto& g = doc.at("gluing");
      out.gluing = GluingData{read_linear(g, "alpha_L"), read_linear(g, "alpha_R"),
                              read_linear(g, "beta_L"), read_linear(g, "beta_R")};
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid geometry: ") + e.what());
  }
}

GeometryFile read_geometry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_geometry(ss.str());
}

std::string serialize_geometry(const GeometryFile& file) {
  const auto& f = file.geometry;
  json doc;
  doc["degree"] = f.degree();
  doc["regularity"] = f.regularity();
  doc["knots_interior"] = f.space().knots().interior();
  for (Side s : kSides) {
    json pts = json::array();
    for (const auto& c : f.control(s)) pts.push_back({c.x(), c.y()});
    doc["patches"][side_name(s)]["control_points"] = std::move(pts);
  }
  if (file.gluing) {
    const auto& g = *file.gluing;
    doc["gluing"] = {{"alpha_L", write_poly(g.alpha_L)},
                     {"alpha_R", write_poly(g.alpha_R)},
                     {"beta_L", write_poly(g.beta_L)},
                     {"beta_R", write_poly(g.beta_R)}};
  }
  return doc.dump(1) + "\n";
}

void write_geometry(const std::string& path, const GeometryFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_geometry(file);
}

void write_basis_jsonl(std::ostream& os, const SmoothBasis& basis) {
  const int n = basis.n;
  for (int m = 0; m < basis.size(); ++m) {
    json rec;
    rec["family"] = family_name(basis.triplets[m].family);
    rec["j"] = basis.triplets[m].j;
    for (Side s : kSides) {
      json rows = json::array();
      for (int i = 0; i < 3; ++i) {
        std::vector<double> row(n);
        for (int j = 0; j < n; ++j) row[j] = basis.A(s)(m, i * n + j);
        rows.push_back(row);
      }
      rec[std::string("rows_") + side_name(s)] = std::move(rows);
    }
    os << rec.dump() << '\n';
  }
}

}  // namespace c2iga
