#include <gtest/gtest.h>

#include <algorithm>

#include "stubborn/errors.hpp"
#include "stubborn/fixtures.hpp"
#include "stubborn/stubborn.hpp"

using namespace stubborn;

namespace {

const std::vector<std::string> kXYZ{"X1", "X2", "X3"};

Polynomial P3(const std::string& s) { return parse(s, kXYZ); }

std::vector<std::string> texts(const std::vector<ProjectivePoint>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string pt(const std::string& s) { return ProjectivePoint::parse(s).to_string(); }

}  // namespace

TEST(Zeros, Motzkin) {
  ZeroSet z = locate_real_zeros(fixtures::motzkin());
  EXPECT_TRUE(z.complete);
  EXPECT_FALSE(z.positive_dimensional);
  EXPECT_EQ(texts(z.points), sorted({pt("[1:1:1]"), pt("[1:-1:1]"), pt("[-1:1:1]"),
                                     pt("[-1:-1:1]"), pt("[1:0:0]"), pt("[0:1:0]")}));
}

TEST(Zeros, Stengle) {
  ZeroSet z = locate_real_zeros(fixtures::stengle_t());
  EXPECT_TRUE(z.complete);
  EXPECT_EQ(texts(z.points), sorted({pt("[0:0:1]"), pt("[0:1:0]")}));
}

TEST(Zeros, RobinsonAndChoiLam) {
  ZeroSet r = locate_real_zeros(fixtures::robinson());
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.points.size(), 10u);
  ZeroSet s = locate_real_zeros(fixtures::choi_lam_s());
  EXPECT_TRUE(s.complete);
  EXPECT_EQ(s.points.size(), 7u);
  ZeroSet o = locate_real_zeros(fixtures::octic());
  EXPECT_TRUE(o.complete);
  EXPECT_EQ(o.points.size(), 7u);
}

TEST(Zeros, EveryPointIsASingularZero) {
  for (const auto& P : {fixtures::motzkin(), fixtures::robinson(), fixtures::choi_lam_s(),
                        fixtures::stengle_t(), fixtures::octic()}) {
    for (const auto& X : locate_real_zeros(P).points) {
      EXPECT_TRUE(X.is_real());
      EXPECT_TRUE(P.evaluate(X.coords()).is_zero());
      for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(P.derivative(i).evaluate(X.coords()).is_zero());
    }
  }
}

TEST(Zeros, QuadraticCoordinates) {
  // (X1^2 - 2 X3^2)^2 + X2^2 X3^2 has real zeros [+-sqrt 2 : 0 : 1] and [0:1:0].
  ZeroSet z = locate_real_zeros(power(P3("X1^2 - 2*X3^2"), 2) + P3("X2^2*X3^2"));
  EXPECT_TRUE(z.complete);
  EXPECT_EQ(texts(z.points), sorted({pt("[sqrt(2):0:1]"), pt("[-sqrt(2):0:1]"), pt("[0:1:0]")}));
}

TEST(Zeros, PositiveDimensionalFlagged) {
  ZeroSet a = locate_real_zeros(power(P3("X1^2 - X2^2"), 2));
  EXPECT_TRUE(a.positive_dimensional);
  EXPECT_FALSE(a.complete);
  ZeroSet b = locate_real_zeros(P3("X1^2*X3^2 + X2^2*X3^2"));
  EXPECT_TRUE(b.positive_dimensional);
  // A repeated factor without real branches is partial but not a curve of zeros.
  ZeroSet c = locate_real_zeros(power(P3("X1^2 + X2^2 + X3^2"), 2));
  EXPECT_FALSE(c.positive_dimensional);
}

TEST(Zeros, ArityGuard) {
  EXPECT_THROW(locate_real_zeros(fixtures::horn()), InputError);
  EXPECT_THROW(locate_real_zeros(P3("X1^2 + X2")), InputError);
  EXPECT_THROW(locate_real_zeros(Polynomial(kXYZ)), InputError);
}

TEST(Bezout, KnownPairs) {
  struct Case {
    Polynomial F;
    std::string G;
  };
  std::vector<Case> cases{{fixtures::motzkin(), "X1 - X2"},
                          {fixtures::motzkin(), "X3"},
                          {fixtures::robinson(), "X3"},
                          {fixtures::choi_lam_s(), "X1 - X2"}};
  for (const auto& c : cases) {
    Polynomial G = P3(c.G);
    IntersectionCount n = intersection_count(c.F, G);
    EXPECT_TRUE(n.complete) << c.G;
    EXPECT_EQ(n.total, c.F.degree() * G.degree()) << c.G;
  }
}

TEST(Bezout, MotzkinLineMultiplicities) {
  IntersectionCount n = intersection_count(fixtures::motzkin(), P3("X1 - X2"));
  std::map<std::string, long> m;
  for (const auto& p : n.points) m[p.point.to_string()] = p.multiplicity;
  EXPECT_EQ(m.at(pt("[1:1:1]")), 2);
  EXPECT_EQ(m.at(pt("[-1:-1:1]")), 2);
  EXPECT_EQ(n.points.size(), 4u);  // two more over Q(sqrt -2)
}

TEST(Bezout, TotalsMatchDegreesWheneverComplete) {
  std::vector<Polynomial> forms{fixtures::motzkin(), fixtures::robinson(), fixtures::choi_lam_s(),
                                fixtures::stengle_t(), fixtures::octic()};
  std::vector<std::string> others{"X1", "X2", "X1 + X2 - X3", "X1^2 + X2^2 - X3^2",
                                  "X1*X2 - X3^2", "X2^2 - X1*X3"};
  int complete = 0;
  for (const auto& F : forms)
    for (const auto& g : others) {
      Polynomial G = P3(g);
      IntersectionCount n = intersection_count(F, G);
      if (!n.complete) continue;
      ++complete;
      EXPECT_EQ(n.total, F.degree() * G.degree()) << F.to_string() << " / " << g;
    }
  EXPECT_GE(complete, 10);
}

TEST(Bezout, MultiplicitiesMatchResultantOracle) {
  Polynomial F = fixtures::stengle_t(), G = P3("X1*X2 - X3^2");
  IntersectionCount n = intersection_count(F, G);
  for (const auto& p : n.points) {
    if (!p.point.is_real()) continue;
    const std::string& chart = kXYZ[p.point.chart()];
    EXPECT_EQ(p.multiplicity, resultant_intersection_oracle(dehomogenize(F, chart),
                                                            dehomogenize(G, chart),
                                                            p.point.affine()));
  }
}

TEST(Bezout, CommonFactorRejected) {
  EXPECT_THROW(intersection_count(P3("X1*X2"), P3("X1*X3")), InputError);
}

TEST(Certify, Motzkin) {
  auto c = certify_stubborn(fixtures::motzkin(), std::nullopt);
  EXPECT_EQ(c.total, 10);
  EXPECT_EQ(c.threshold, 9);
  EXPECT_EQ(c.verdict, Verdict::Stubborn);
  EXPECT_EQ(c.provenance, "sos-invariant");
  EXPECT_TRUE(c.zeros_complete);
  EXPECT_EQ(c.zeros.size(), 6u);
}

TEST(Certify, RobinsonRoundZeros) {
  auto c = certify_stubborn(fixtures::robinson(), std::nullopt);
  EXPECT_EQ(c.total, 10);
  EXPECT_EQ(c.verdict, Verdict::Stubborn);
  EXPECT_EQ(c.provenance, "round-zeros");
}

TEST(Certify, ChoiLam) {
  auto c = certify_stubborn(fixtures::choi_lam_s(), std::nullopt);
  EXPECT_EQ(c.total, 10);
  EXPECT_EQ(c.verdict, Verdict::Stubborn);
}

TEST(Certify, StengleIsInconclusive) {
  auto c = certify_stubborn(fixtures::stengle_t(), std::nullopt);
  EXPECT_EQ(c.total, 9);
  EXPECT_EQ(c.threshold, 9);
  EXPECT_EQ(c.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(c.notes.empty());
}

TEST(Certify, Octic) {
  auto c = certify_stubborn(fixtures::octic(), std::nullopt, {.jobs = 2});
  EXPECT_EQ(c.total, 17);
  EXPECT_EQ(c.threshold, 16);
  EXPECT_EQ(c.verdict, Verdict::Stubborn);
  std::vector<long> per;
  for (const auto& z : c.zeros) per.push_back(z.local.delta_sos.get_num().get_si());
  std::sort(per.begin(), per.end());
  EXPECT_EQ(per, (std::vector<long>{1, 1, 1, 1, 1, 6, 6}));
  ASSERT_TRUE(c.delta_total);
  EXPECT_EQ(*c.delta_total, 21);
}

TEST(Certify, JobsDoNotChangeTheResult) {
  auto a = certify_stubborn(fixtures::motzkin(), std::nullopt, {.jobs = 1});
  auto b = certify_stubborn(fixtures::motzkin(), std::nullopt, {.jobs = 4});
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Certify, TotalIsMonotoneInTheZeroSet) {
  Polynomial M = fixtures::motzkin();
  auto all = locate_real_zeros(M).points;
  mpq_class previous = 0;
  for (std::size_t k = 0; k <= all.size(); ++k) {
    std::vector<ProjectivePoint> part(all.begin(), all.begin() + k);
    auto c = certify_stubborn(M, part);
    EXPECT_GE(c.total, previous);
    EXPECT_FALSE(c.zeros_complete);
    EXPECT_EQ(c.verdict, c.total > 9 ? Verdict::Stubborn : Verdict::Inconclusive);
    previous = c.total;
  }
  EXPECT_EQ(previous, 10);
}

TEST(Certify, SosInvariantScalesWithPowers) {
  for (const auto& P : {fixtures::motzkin(), fixtures::robinson(), fixtures::choi_lam_s(),
                        fixtures::stengle_t(), fixtures::octic()}) {
    for (const auto& X : locate_real_zeros(P).points) {
      Polynomial f = dehomogenize(P, P.vars()[X.chart()]);
      mpq_class base = delta_invariants(f, X.affine()).delta_sos;
      for (unsigned k : {2u, 3u})
        EXPECT_EQ(sos_invariant_of_power(f, X.affine(), k), k * k * base) << X.to_string();
    }
  }
}

TEST(Certify, Rejections) {
  EXPECT_THROW(certify_stubborn(P3("X1^4 + X2^4 - X3^4"), std::nullopt), InapplicableError);
  EXPECT_THROW(certify_stubborn(P3("X1^3 + X2^3 + X3^3"), std::nullopt), InapplicableError);
  EXPECT_THROW(certify_stubborn(fixtures::horn(), std::nullopt), InputError);
  EXPECT_THROW(certify_stubborn(power(P3("X1^2 - X2^2"), 2), std::nullopt),
               NonIsolatedZero);
  std::vector<ProjectivePoint> bogus{ProjectivePoint::parse("[1:2:1]")};
  EXPECT_THROW(certify_stubborn(fixtures::motzkin(), bogus), InputError);
}

TEST(Lift, MonomialLift) {
  Polynomial M = fixtures::motzkin();
  EXPECT_EQ(lift_by_monomial(M, 0).form, M);
  Lift l = lift_by_monomial(M, 1);
  EXPECT_TRUE(l.reducible);
  EXPECT_EQ(l.form, P3("X1^2") * M);
  EXPECT_THROW(certify_stubborn(l.form, std::nullopt), NonIsolatedZero);
  auto base = certify_stubborn(M, std::nullopt);
  auto c = lift_certificate(base, 2);
  EXPECT_EQ(c.verdict, Verdict::Stubborn);
  EXPECT_EQ(c.provenance, "monomial-lift");
  EXPECT_EQ(c.degree, 10);
}

TEST(Transfer, QuaternaryRestriction) {
  Polynomial Q = fixtures::quaternary_q();
  const std::vector<std::string> xy{"X1", "X2"};
  std::map<std::string, Polynomial> sigma{{"X1", parse("X1", xy)},
                                          {"X2", parse("X2", xy)},
                                          {"X3", parse("X1*X2", xy)},
                                          {"X4", parse("1", xy)}};
  auto base = certify_stubborn(fixtures::motzkin(), std::nullopt);
  auto c = restriction_transfer(Q, sigma, base, "X3");
  EXPECT_EQ(c.verdict, Verdict::Stubborn);
  EXPECT_EQ(c.provenance, "substitution");
  EXPECT_THROW(restriction_transfer(Q, sigma, base), InapplicableError);
}

TEST(Transfer, HornRestriction) {
  Polynomial F = fixtures::horn();
  std::map<std::string, Polynomial> sigma{{"X4", Polynomial::constant(0, kXYZ)},
                                          {"X5", Polynomial::constant(0, kXYZ)}};
  EXPECT_FALSE(check_substitution(F, sigma, power(P3("X1^2 - X2^2 + X3^2"), 2)));
}

TEST(Transfer, MismatchReportsTheExactCoefficient) {
  std::map<std::string, Polynomial> sigma{{"X3", P3("X1 + X2")}};
  auto m = check_substitution(P3("X1*X3"), sigma, P3("X1^2 + 2*X1*X2"));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->difference, Coefficient(-1));
  EXPECT_EQ(m->to_string(), "coefficient of X1*X2 differs by -1");
  EXPECT_FALSE(check_substitution(P3("X1*X3"), sigma, P3("X1^2 + X1*X2")));
}

TEST(Transfer, EmbeddingInMoreVariables) {
  Polynomial M4 = fixtures::motzkin().with_vars({"X1", "X2", "X3", "X4"});
  std::map<std::string, Polynomial> sigma{{"X4", Polynomial::constant(0, kXYZ)}};
  auto base = certify_stubborn(fixtures::motzkin(), std::nullopt);
  EXPECT_EQ(restriction_transfer(M4, sigma, base).verdict, Verdict::Stubborn);
}

TEST(Certify, JsonShape) {
  auto c = certify_stubborn(fixtures::stengle_t(), std::nullopt);
  auto j = to_json(c);
  EXPECT_EQ(j["verdict"], "inconclusive");
  EXPECT_EQ(j["threshold"], "9");
  EXPECT_EQ(j["zeros"].size(), 2u);
  EXPECT_TRUE(j["zeros"][0].contains("tree"));
  EXPECT_FALSE(to_json(c, false)["zeros"][0].contains("tree"));
}
