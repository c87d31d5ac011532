#include <gtest/gtest.h>

#include <random>

#include "stubborn/blowup.hpp"
#include "stubborn/elimination.hpp"
#include "stubborn/errors.hpp"
#include "stubborn/fixtures.hpp"

using namespace stubborn;

namespace {

const std::vector<Coefficient> kOrigin = {0, 0};

Polynomial xy(const std::string& s) { return parse(s, {"x", "y"}); }

Polynomial stengle_f() {
  return parse("x1^3 + x2^4 - 2*x1*x2^2 - 2*x1^3*x2^2 + x1^2 + 2*x1^4 + x1^6", {"x1", "x2"});
}

// Random polynomial with zero constant term.
Polynomial random_through_origin(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(1, max_deg), terms(1, 4);
  Polynomial p({"x", "y"});
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    int d = deg(rng);
    std::uniform_int_distribution<int> split(0, d);
    unsigned i = split(rng);
    p.add_term({i, static_cast<unsigned>(d) - i}, coef(rng));
  }
  return p;
}

void expect_chain(const LocalInvariants& inv) {
  ASSERT_TRUE(inv.delta && inv.delta_real);
  EXPECT_LE(inv.delta_sos, mpq_class(*inv.delta_real));
  EXPECT_LE(*inv.delta_real, *inv.delta);
}

bool all_mult_two(const ResolutionNode& n) {
  if (n.m > 2) return false;
  for (const auto& c : n.children)
    if (!all_mult_two(c)) return false;
  return true;
}

}  // namespace

TEST(StrictTransform, StengleChain) {
  Polynomial f = stengle_f();
  auto st = strict_transform(f, kOrigin, Direction{0, 1, 2});
  EXPECT_EQ(st.m, 2);
  EXPECT_EQ(st.poly, parse("x1^2 + x2^2 - 2*x1*x2 + x1^3*x2 + 2*x1^4*x2^2 - 2*x1^3*x2^3 + x1^6*x2^4",
                           {"x1", "x2"}));
  EXPECT_EQ(st.chart, "x1 = x1'*x2");
  auto near = infinitely_near_points(st.poly, kOrigin, NearVariant::Real);
  ASSERT_EQ(near.points.size(), 1u);
  EXPECT_EQ(near.points[0].direction.to_string(), "[1:1]");
  EXPECT_EQ(near.points[0].chart_point[0], Coefficient(1));
  auto st2 = strict_transform(st.poly, kOrigin, near.points[0].direction);
  EXPECT_EQ(st2.poly.lowest_degree(), 2);
  EXPECT_THROW(strict_transform(f, kOrigin, Direction{1, 1, 1}), InputError);
}

TEST(StrictTransform, SmoothPoint) {
  auto st = strict_transform(xy("y - x"), kOrigin, Direction{1, 1, 1});
  EXPECT_EQ(st.m, 1);
  EXPECT_EQ(st.poly.lowest_degree(), 1);
}

TEST(StrictTransform, FactorsThroughChart) {
  // p(chart(x)) = e^m p'(x) for both charts.
  Polynomial p = xy("x^2*y - y^3 + x^4 + 2*x*y^3");
  Polynomial X = Polynomial::variable("x", {"x", "y"}), Y = Polynomial::variable("y", {"x", "y"});
  auto st = strict_transform(p, kOrigin, Direction{1, 1, 1});
  Polynomial lhs = substitute(p, {{"x", (X + Polynomial::constant(1, {"x", "y"})) * Y}, {"y", Y}});
  EXPECT_EQ(lhs, power(Y, st.m) * st.poly);
  auto st0 = strict_transform(xy("y^2 - x^3"), kOrigin, Direction{1, 0, 2});
  Polynomial lhs0 = substitute(xy("y^2 - x^3"), {{"x", X}, {"y", Y * X}});
  EXPECT_EQ(lhs0, power(X, 2) * st0.poly);
}

TEST(NearPoints, Examples) {
  auto circle = infinitely_near_points(xy("x^2 + y^2 + x^3"), kOrigin, NearVariant::Real);
  EXPECT_TRUE(circle.points.empty());
  auto circle_c = infinitely_near_points(xy("x^2 + y^2 + x^3"), kOrigin, NearVariant::Complex);
  ASSERT_EQ(circle_c.points.size(), 1u);
  EXPECT_EQ(circle_c.points[0].reality, Reality::ComplexPair);

  auto mixed = infinitely_near_points(xy("x^3 - x^2*y + y^4"), kOrigin, NearVariant::Real);
  ASSERT_EQ(mixed.points.size(), 2u);
  EXPECT_EQ(mixed.points[0].direction.to_string(), "[0:1]");
  EXPECT_EQ(mixed.points[0].tangent_multiplicity, 2);
  EXPECT_EQ(mixed.points[1].direction.to_string(), "[1:1]");
  EXPECT_EQ(mixed.points[1].tangent_multiplicity, 1);

  EXPECT_THROW(infinitely_near_points(xy("x^3 - 2*y^3 + x^4"), kOrigin, NearVariant::Real),
               UnsupportedExtension);
}

TEST(Delta, StengleAffine) {
  auto inv = delta_invariants(stengle_f(), kOrigin);
  EXPECT_EQ(*inv.delta, 3);
  EXPECT_EQ(inv.delta_sos, 3);
  ASSERT_EQ(inv.tree.children.size(), 1u);
  EXPECT_EQ(inv.tree.children[0].m, 2);
  ASSERT_EQ(inv.tree.children[0].children.size(), 1u);
  EXPECT_EQ(inv.tree.children[0].children[0].center[0], Coefficient(1));
}

TEST(Delta, TChartSix) {
  Polynomial T = fixtures::stengle_t();
  Polynomial t = dehomogenize(T, "X2");
  auto inv = delta_invariants(t, kOrigin);
  EXPECT_EQ(*inv.delta, 6);
  EXPECT_EQ(inv.delta_sos, 6);
  auto z = delta_at_point(T, ProjectivePoint::parse("[0:0:1]"));
  EXPECT_EQ(*z.delta, 3);
  EXPECT_EQ(z.delta_sos, 3);
}

TEST(Delta, OrdinarySingularity) {
  auto inv = delta_invariants(xy("x^2 + y^2 + x^3 + y^5"), kOrigin);
  EXPECT_EQ(*inv.delta, 1);
  EXPECT_EQ(*inv.delta_real, 1);
  EXPECT_EQ(inv.delta_sos, 1);
  EXPECT_TRUE(inv.locally_nonnegative);
  auto node = delta_invariants(xy("x^2 - y^2 + x^3"), kOrigin);
  EXPECT_EQ(*node.delta, 1);
  EXPECT_EQ(node.delta_sos, 1);
  EXPECT_FALSE(node.locally_nonnegative);
  auto smooth = delta_invariants(xy("y - x^2"), kOrigin);
  EXPECT_EQ(*smooth.delta, 0);
  EXPECT_EQ(smooth.delta_sos, 0);
}

TEST(Delta, MotzkinZeros) {
  Polynomial M = fixtures::motzkin();
  auto far = delta_at_point(M, ProjectivePoint::parse("[1:0:0]"));
  EXPECT_EQ(*far.delta, 3);
  EXPECT_EQ(far.delta_sos, 3);
  expect_chain(far);
  auto round = delta_at_point(M, ProjectivePoint::parse("[1:-1:1]"));
  EXPECT_EQ(*round.delta, 1);
  EXPECT_EQ(round.delta_sos, 1);
  EXPECT_THROW(delta_at_point(M, ProjectivePoint::parse("[1:2:1]")), InputError);
}

TEST(Delta, OcticDegenerateZero) {
  Polynomial P = fixtures::octic();
  auto inv = delta_at_point(P, ProjectivePoint::parse("[1:0:0]"));
  EXPECT_EQ(*inv.delta, 8);
  EXPECT_EQ(inv.delta_sos, 6);
  expect_chain(inv);
  EXPECT_TRUE(inv.locally_nonnegative);
}

TEST(Delta, NonIsolatedRejected) {
  EXPECT_THROW(delta_invariants(xy("x^2 - 2*x*y + y^2 + x^3 - 2*x^2*y + x*y^2"), kOrigin), NonIsolatedZero);
  // A repeated factor away from the center is fine.
  EXPECT_NO_THROW(delta_invariants(xy("x^4 + x^2*y^2 - 2*x^3 - 2*x*y^2 + x^2 + y^2"), kOrigin));
}

TEST(Delta, DepthGuard) {
  EXPECT_THROW(sos_invariant_of_power(xy("x^2 - y^2"), kOrigin, 2), Error);
}

TEST(Delta, AllMultTwoGivesEquality) {
  for (const char* s : {"y^2 - x^4 + x^5", "x^2 + y^4", "y^2 + x^6 + x^3*y^2"}) {
    auto inv = delta_invariants(xy(s), kOrigin);
    if (!all_mult_two(inv.tree)) continue;
    EXPECT_EQ(mpq_class(*inv.delta), inv.delta_sos) << s;
  }
}

TEST(Delta, JsonShape) {
  auto inv = delta_invariants(stengle_f(), kOrigin);
  auto j = to_json(inv);
  EXPECT_EQ(j["delta"], 3);
  EXPECT_EQ(j["tree"]["m"], 2);
  EXPECT_EQ(j["tree"]["children"][0]["chart"], "x1 = x1'*x2");
  EXPECT_EQ(j["tree"]["children"][0]["contribution"]["delta_sos"], "2");
}

TEST(SosPower, ScalingLaw) {
  Polynomial M = fixtures::motzkin();
  Polynomial chart = dehomogenize(M, "X1");
  EXPECT_EQ(sos_invariant_of_power(chart, kOrigin, 1), 3);
  EXPECT_EQ(sos_invariant_of_power(chart, kOrigin, 3), 27);
  EXPECT_EQ(sos_invariant_of_power(xy("x^2 + y^2 + x^3"), kOrigin, 2), 4);
}

TEST(Intersection, Examples) {
  EXPECT_EQ(intersection_multiplicity(xy("x"), xy("y"), kOrigin).value, 1);
  EXPECT_EQ(intersection_multiplicity(xy("x^2"), xy("y^3"), kOrigin).value, 6);
  EXPECT_EQ(intersection_multiplicity(xy("y - x^2"), xy("y"), kOrigin).value, 2);
  EXPECT_EQ(intersection_multiplicity(xy("x + 1"), xy("y"), kOrigin).value, 0);
  EXPECT_TRUE(intersection_multiplicity(xy("x*y"), xy("x^2 + x*y^3"), kOrigin).infinite);
  EXPECT_EQ(resultant_intersection_oracle(xy("x"), xy("y"), kOrigin), 1);
  EXPECT_EQ(resultant_intersection_oracle(xy("y - x^2"), xy("y"), kOrigin), 2);
  EXPECT_EQ(resultant_intersection_oracle(xy("x^2"), xy("y^3"), kOrigin), 6);
}

TEST(Intersection, LowerBoundAndTangents) {
  // Shared tangent y = 0: strictly above m(f) m(g).
  EXPECT_GT(intersection_multiplicity(xy("y - x^2"), xy("y + x^3"), kOrigin).value, 1);
  // Distinct tangents: equality.
  EXPECT_EQ(intersection_multiplicity(xy("x^2 - y^3"), xy("y^2 + x^3"), kOrigin).value, 4);
  // Complex common tangents over Q(i).
  EXPECT_EQ(intersection_multiplicity(xy("x^2 + y^2"), xy("x^2 + y^2 + x^3"), kOrigin).value, 6);
}

TEST(Intersection, NoetherMatchesResultantOracle) {
  std::mt19937 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 30; ++trial) {
    Polynomial f = random_through_origin(rng, 4), g = random_through_origin(rng, 4);
    if (f.is_zero() || g.is_zero()) continue;
    if (bivariate_gcd(f, g).degree() > 0) continue;
    try {
      auto noe = intersection_multiplicity(f, g, kOrigin);
      ASSERT_FALSE(noe.infinite);
      EXPECT_EQ(noe.value, resultant_intersection_oracle(f, g, kOrigin))
          << f.to_string() << " | " << g.to_string();
      ++checked;
    } catch (const UnsupportedExtension&) {
    }
  }
  EXPECT_GE(checked, 20);
}

TEST(Intersection, NonRationalCenter) {
  // (x^2 - 2) and y meet at (sqrt2, 0) transversally.
  std::vector<Coefficient> c = {Coefficient::sqrt_of(2), 0};
  EXPECT_EQ(intersection_multiplicity(xy("x^2 - 2"), xy("y"), c).value, 1);
  EXPECT_EQ(intersection_multiplicity(xy("x^2 - 2 + y^2"), xy("y^2"), c).value, 2);
}
