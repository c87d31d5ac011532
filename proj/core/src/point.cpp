#include "stubborn/point.hpp"

#include "stubborn/errors.hpp"
#include "stubborn/polynomial.hpp"

namespace stubborn {

ProjectivePoint::ProjectivePoint(std::vector<Coefficient> coords) : coords_(std::move(coords)) {
  std::size_t last = coords_.size();
  for (std::size_t i = coords_.size(); i-- > 0;) {
    if (!coords_[i].is_zero()) {
      last = i;
      break;
    }
  }
  if (last == coords_.size()) throw InputError("projective point with all coordinates zero");
  Coefficient inv = coords_[last].inverse();
  for (auto& c : coords_) c *= inv;
  field();  // rejects mixed fields
}

ProjectivePoint ProjectivePoint::parse(const std::string& text) {
  std::string s = text;
  auto l = s.find('['), r = s.rfind(']');
  if (l != std::string::npos) {
    if (r == std::string::npos || r < l) throw ParseError("unbalanced bracket", l);
    s = s.substr(l + 1, r - l - 1);
  }
  std::vector<Coefficient> coords;
  std::size_t start = 0;
  for (;;) {
    auto colon = s.find(':', start);
    std::string piece = s.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
    coords.push_back(parse_coefficient(piece));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (coords.size() < 2) throw InputError("projective point needs at least two coordinates: " + text);
  return ProjectivePoint(std::move(coords));
}

long ProjectivePoint::field() const {
  long d = 1;
  for (const auto& c : coords_) d = join_fields(d, c.field());
  return d;
}

bool ProjectivePoint::is_real() const {
  for (const auto& c : coords_)
    if (!c.is_real()) return false;
  return true;
}

std::size_t ProjectivePoint::chart() const {
  for (std::size_t i = coords_.size(); i-- > 0;)
    if (!coords_[i].is_zero()) return i;
  return 0;
}

std::vector<Coefficient> ProjectivePoint::affine() const {
  std::vector<Coefficient> out;
  std::size_t c = chart();
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (i != c) out.push_back(coords_[i]);
  return out;
}

std::string ProjectivePoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ":";
    s += coords_[i].to_string();
  }
  return s + "]";
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  // chart first (affine points before points at infinity), then coordinates
  if (a.chart() != b.chart()) return a.chart() > b.chart();
  for (std::size_t i = 0; i < std::min(a.dim(), b.dim()); ++i) {
    if (a.coords_[i] == b.coords_[i]) continue;
    if (a.coords_[i].is_real() && b.coords_[i].is_real()) {
      long fa = a.coords_[i].field(), fb = b.coords_[i].field();
      if (fa == 1 || fb == 1 || fa == fb) {
        int s = (a.coords_[i] - b.coords_[i]).sign();
        if (s != 0) return s < 0;
      } else {
        return a.coords_[i].to_double() < b.coords_[i].to_double();
      }
    }
    return structural_less(a.coords_[i], b.coords_[i]);
  }
  return a.dim() < b.dim();
}

}  // namespace stubborn
