#pragma once

#include <string>

#include "c2iga/gluing.hpp"
#include "c2iga/io.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(C2IGA_DATA_DIR) + "/" + name;
}

inline c2iga::GeometryFile load(const std::string& name) {
  return c2iga::read_geometry(data_path(name));
}

/// Gluing data in closed form for the two bundled geometries.
inline c2iga::GluingData gluing_a() {
  return {{-9, -1}, {10.5, -1.5}, {-3.0 / 18, 5.0 / 18}, {-1.0 / 12, 3.0 / 12}};
}
inline c2iga::GluingData gluing_b() {
  return {{-18, 9}, {18, -9}, {1, -0.5}, {1, -0.5}};
}

/// beta with a single root at 1/2.
inline c2iga::GluingData gluing_one_root() {
  return {{-1}, {1}, {-0.5, 1}, {}};
}
/// beta = -(v - 1/4)(v - 3/4).
inline c2iga::GluingData gluing_two_roots() {
  return {{-1, -1}, {1}, {0.1875, -2}, {0, 1}};
}
/// beta identically zero.
inline c2iga::GluingData gluing_beta_zero() {
  return {{-2, 0.5}, {1, 0.25}, {}, {}};
}
/// q = v - 2 does not divide beta^(S): h = q.
inline c2iga::GluingData gluing_h_nontrivial() {
  return {{2, -1}, {-2, 1}, {1}, {0, 1}};
}

}  // namespace fixtures
