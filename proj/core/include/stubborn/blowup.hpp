#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stubborn/point.hpp"
#include "stubborn/realroots.hpp"

namespace stubborn {

enum class Reality { Real, ComplexPair, Complex };
std::string to_string(Reality r);

struct ResolutionNode {
  // Near point in the chart coordinates before translation; the root keeps the input center.
  std::vector<Coefficient> center;
  std::string chart = "origin";
  std::optional<Direction> direction;
  Polynomial local_poly;  // translated so the center is the origin
  int m = 0;
  int tangent_multiplicity = 0;
  Reality reality = Reality::Real;
  std::vector<ResolutionNode> children;
  // Subtree values; empty where a complex near point could not be resolved.
  std::optional<long> delta, delta_real, delta_real_strict;
  mpq_class delta_sos = 0;
};

struct DeltaOptions {
  bool sos_only = false;  // skip non-real near points entirely
  int max_depth = 64;
};

struct LocalInvariants {
  std::optional<long> delta, delta_real, delta_real_strict;
  mpq_class delta_sos = 0;
  bool locally_nonnegative = true;  // no odd multiplicity or sign-changing tangent seen
  std::vector<std::string> notes;
  ResolutionNode tree;
};

struct StrictTransform {
  std::string chart;
  int m = 0;
  Polynomial poly;  // in (x', y) or (x, y') translated to the near point
};

// Blow-up of p at center in the chart exposing direction; p uses its two
// variables in order (x, y).
StrictTransform strict_transform(const Polynomial& p, const std::vector<Coefficient>& center,
                                 const Direction& direction);

struct NearPoint {
  Direction direction;
  Reality reality = Reality::Real;
  int tangent_multiplicity = 1;
  std::vector<Coefficient> chart_point;  // coordinates on the exceptional line
};

struct NearPoints {
  std::vector<NearPoint> points;
  std::vector<int> unsupported_degrees;  // complex factor classes without exact roots
};

enum class NearVariant { Real, Complex };

NearPoints infinitely_near_points(const Polynomial& p, const std::vector<Coefficient>& center,
                                  NearVariant variant);

LocalInvariants delta_invariants(const Polynomial& p, const std::vector<Coefficient>& center,
                                 const DeltaOptions& options = {});

mpq_class sos_invariant_of_power(const Polynomial& p, const std::vector<Coefficient>& center,
                                 unsigned k);

struct IntersectionMultiplicity {
  bool infinite = false;
  long value = 0;
};

IntersectionMultiplicity intersection_multiplicity(const Polynomial& f, const Polynomial& g,
                                                   const std::vector<Coefficient>& center);

long resultant_intersection_oracle(const Polynomial& f, const Polynomial& g,
                                   const std::vector<Coefficient>& center, int trials = 6,
                                   unsigned seed = 20240611);

// Per-zero invariants of a ternary form.
struct ZeroInvariants {
  ProjectivePoint point;
  LocalInvariants local;
};

struct InvariantReport {
  std::vector<ZeroInvariants> per_zero;
  std::optional<long> delta, delta_real;
  mpq_class delta_sos = 0;
};

// Dehomogenizes F in the chart of the point and resolves there.
LocalInvariants delta_at_point(const Polynomial& F, const ProjectivePoint& X,
                               const DeltaOptions& options = {});
InvariantReport invariant_report(const Polynomial& F, const std::vector<ProjectivePoint>& zeros,
                                 const DeltaOptions& options = {}, int jobs = 1);

nlohmann::json to_json(const ResolutionNode& node);
nlohmann::json to_json(const LocalInvariants& inv);

}  // namespace stubborn
