#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "c2iga/basis.hpp"
#include "c2iga/geometry.hpp"
#include "c2iga/gluing.hpp"

namespace c2iga {

/// Two-patch geometry file, optionally carrying gluing data.
struct GeometryFile {
  TwoPatchGeometry geometry;
  std::optional<GluingData> gluing;
};

/// Parse a geometry document. Throws std::invalid_argument with a
/// diagnostic on malformed input.
GeometryFile parse_geometry(const std::string& text);
GeometryFile read_geometry(const std::string& path);

std::string serialize_geometry(const GeometryFile& file);
void write_geometry(const std::string& path, const GeometryFile& file);

/// One JSON object per line: {family, j, rows_L, rows_R} with rows 3 x n.
void write_basis_jsonl(std::ostream& os, const SmoothBasis& basis);

}  // namespace c2iga
