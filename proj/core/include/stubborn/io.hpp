#pragma once

#include <string>
#include <vector>

#include "stubborn/point.hpp"
#include "stubborn/polynomial.hpp"

namespace stubborn {

// Contents of a .poly file: '#' comments, optional "vars:" and "params:" headers,
// then one polynomial expression (possibly spanning lines).
struct PolyFile {
  std::string title;
  std::vector<std::string> vars;
  std::vector<std::string> params;
  Polynomial poly;  // over vars followed by params

  // Substitute rational parameter values; result is over vars only.
  Polynomial instantiate(const std::vector<Coefficient>& values) const;
};

PolyFile parse_poly_text(const std::string& text);
PolyFile load_poly_file(const std::string& path);

// One projective point per non-comment line.
std::vector<ProjectivePoint> parse_zero_text(const std::string& text);
std::vector<ProjectivePoint> load_zero_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace stubborn
