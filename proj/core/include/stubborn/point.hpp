#pragma once

#include <string>
#include <vector>

#include "stubborn/coefficient.hpp"

namespace stubborn {

// Projective point, normalized so the last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  explicit ProjectivePoint(std::vector<Coefficient> coords);

  // "[1:0:0]", "[1 : -1/2 : sqrt(2)]"; brackets optional.
  static ProjectivePoint parse(const std::string& text);

  const std::vector<Coefficient>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  long field() const;
  bool is_real() const;
  // Index of the coordinate equal to 1 after normalization.
  std::size_t chart() const;
  // Remaining coordinates in the affine chart.
  std::vector<Coefficient> affine() const;

  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  std::vector<Coefficient> coords_;
};

}  // namespace stubborn
