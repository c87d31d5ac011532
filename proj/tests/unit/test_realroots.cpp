#include <gtest/gtest.h>

#include <random>

#include "stubborn/errors.hpp"
#include "stubborn/realroots.hpp"

using namespace stubborn;

namespace {

RatPoly rp(std::initializer_list<long> c) {
  std::vector<mpq_class> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

Polynomial xy(const std::string& text) { return parse(text, {"x", "y"}); }

bool contains(const IsolatingInterval& iv, const mpq_class& t) { return iv.lo <= t && t <= iv.hi; }

}  // namespace

TEST(Isolate, SimpleAndDoubleRoots) {
  auto r = isolate_real_roots(rp({-1, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(contains(r[0], -1));
  EXPECT_TRUE(contains(r[1], 1));
  EXPECT_EQ(r[0].multiplicity, 1);

  auto sq = isolate_real_roots(rp({1, 0, -2, 0, 1}));
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_EQ(sq[0].multiplicity, 2);
  EXPECT_EQ(sq[1].multiplicity, 2);
  EXPECT_TRUE(contains(sq[0], -1));

  EXPECT_THROW(isolate_real_roots(RatPoly()), InputError);
}

TEST(Isolate, DisjointAcrossFactors) {
  // (t - 1/3)^2 (t - 1/2) (t^2 - 2): four close-ish roots from different factors.
  RatPoly p = RatPoly(std::vector<mpq_class>{mpq_class(-1, 3), 1}) *
              RatPoly(std::vector<mpq_class>{mpq_class(-1, 3), 1}) *
              RatPoly(std::vector<mpq_class>{mpq_class(-1, 2), 1}) * rp({-2, 0, 1});
  auto r = isolate_real_roots(p);
  ASSERT_EQ(r.size(), 4u);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(r[i - 1].hi, r[i].lo);
  EXPECT_TRUE(contains(r[1], mpq_class(1, 3)));
  EXPECT_EQ(r[1].multiplicity, 2);
}

TEST(Isolate, SturmCountMatchesIsolation) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<mpq_class> c(deg(rng) + 1);
    for (auto& v : c) v = coef(rng);
    // Occasionally force repeated roots.
    RatPoly p(c);
    if (p.degree() <= 0) continue;
    if (trial % 3 == 0) p = p * rp({-1, 0, 1}) * rp({-1, 0, 1});
    auto iv = isolate_real_roots(p);
    EXPECT_EQ(SturmSequence(p).count_all(), static_cast<int>(iv.size())) << to_string(p);
    RatPoly sf = p.squarefree_part();
    for (const auto& i : iv) {
      if (i.exact()) {
        EXPECT_EQ(sgn(p.eval(i.lo)), 0);
      } else {
        EXPECT_NE(sgn(sf.eval(i.lo)), sgn(sf.eval(i.hi)));
      }
    }
  }
}

TEST(Isolate, RefineShrinksToWidth) {
  auto r = isolate_real_roots(rp({-2, 0, 1}));
  ASSERT_EQ(r.size(), 2u);
  refine(r[1], rp({-2, 0, 1}), mpq_class(1, 1000000));
  EXPECT_LT(r[1].hi - r[1].lo, mpq_class(1, 1000000));
  EXPECT_NEAR(r[1].midpoint(), std::sqrt(2.0), 1e-6);
}

TEST(Nonneg, Examples) {
  auto sq = univariate_nonneg(rp({1, 0, -2, 0, 1}));
  EXPECT_TRUE(sq.nonneg);
  EXPECT_FALSE(sq.witness);

  auto cube = univariate_nonneg(rp({0, 0, 0, 1}));
  EXPECT_FALSE(cube.nonneg);
  ASSERT_TRUE(cube.witness);
  EXPECT_EQ(*cube.witness, -1);

  EXPECT_TRUE(univariate_nonneg(rp({1, 0, 1})).nonneg);
  EXPECT_FALSE(univariate_nonneg(rp({-1})).nonneg);
}

TEST(Nonneg, StengleSliceAboveThreshold) {
  // X^2 (c X + (X^2 + 1)^2) at c = 16/5.
  RatPoly inner(std::vector<mpq_class>{1, mpq_class(16, 5), 2, 0, 1});
  RatPoly p = rp({0, 0, 1}) * inner;
  auto r = univariate_nonneg(p);
  EXPECT_FALSE(r.nonneg);
  ASSERT_TRUE(r.witness);
  EXPECT_LT(p.eval(*r.witness), 0);
  // At c = 3 the slice is still nonnegative.
  RatPoly below = rp({0, 0, 1}) * RatPoly(std::vector<mpq_class>{1, 3, 2, 0, 1});
  EXPECT_TRUE(univariate_nonneg(below).nonneg);
}

TEST(Nonneg, WitnessAtExactOddRoot) {
  // t (t - 3) (t^2 + 1): the first bisection midpoint 0 is an exact root.
  RatPoly p = rp({0, 1}) * rp({-3, 1}) * rp({1, 0, 1});
  auto r = univariate_nonneg(p);
  EXPECT_FALSE(r.nonneg);
  ASSERT_TRUE(r.witness);
  EXPECT_LT(p.eval(*r.witness), 0);
}

TEST(ExactRoots, StengleDoubleRootOverSqrt3) {
  // c X + (X^2 + 1)^2 with c = 16 sqrt(3) / 9 has the double root -1/sqrt(3).
  Coefficient c(mpq_class(0), mpq_class(16, 9), 3);
  FieldPoly f(std::vector<Coefficient>{1, c, 2, 0, 1});
  RootSplit rs = exact_roots(f);
  Coefficient target(mpq_class(0), mpq_class(-1, 3), 3);
  bool found = false;
  for (const auto& r : rs.roots)
    if (r.value == target) {
      found = true;
      EXPECT_EQ(r.multiplicity, 2);
    }
  EXPECT_TRUE(found);
  // Remaining factor X^2 - (2/sqrt3) X + 3 has complex roots in Q(sqrt3, i): unsupported but not real.
  EXPECT_FALSE(rs.unsupported_real_roots);
}

TEST(ExactRoots, RationalAndQuadratic) {
  // (3t - 2)^2 (t^2 - 5)(t^2 + t + 1)
  RatPoly p = rp({-2, 3}) * rp({-2, 3}) * rp({-5, 0, 1}) * rp({1, 1, 1});
  RootSplit rs = exact_roots(p);
  EXPECT_TRUE(rs.unsupported.empty());
  int total = 0;
  for (const auto& r : rs.roots) {
    total += r.multiplicity;
    EXPECT_TRUE(lift(p).eval(r.value).is_zero()) << r.value.to_string();
  }
  EXPECT_EQ(total, 6);
}

TEST(ExactRoots, UnsupportedCubicFlagged) {
  RootSplit rs = exact_roots(rp({-2, 0, 0, 1}));
  EXPECT_TRUE(rs.roots.empty());
  ASSERT_EQ(rs.unsupported.size(), 1u);
  EXPECT_TRUE(rs.unsupported_real_roots);
  RootSplit none = exact_roots(rp({1, 0, 1, 0, 0, 0, 1}));  // t^6 + t^2 + 1 > 0
  EXPECT_FALSE(none.unsupported_real_roots);
}

TEST(Tangents, Examples) {
  auto y2 = binary_real_tangents(xy("y^2"));
  ASSERT_EQ(y2.rational_linear.size(), 1u);
  EXPECT_EQ(y2.rational_linear[0].x, Coefficient(1));
  EXPECT_TRUE(y2.rational_linear[0].y.is_zero());
  EXPECT_EQ(y2.rational_linear[0].multiplicity, 2);

  auto circle = binary_real_tangents(xy("x^2 + y^2"));
  EXPECT_TRUE(circle.rational_linear.empty());
  EXPECT_EQ(circle.irreducible_remainder, xy("x^2 + y^2"));
  ASSERT_EQ(circle.complex_pairs.size(), 1u);
  EXPECT_EQ(circle.complex_pairs[0].x, Coefficient::sqrt_of(-1));

  auto r2 = binary_real_tangents(xy("x^2 - 2*y^2"));
  ASSERT_EQ(r2.rational_linear.size(), 2u);
  EXPECT_EQ(r2.rational_linear[0].x, -Coefficient::sqrt_of(2));
  EXPECT_EQ(r2.rational_linear[1].x, Coefficient::sqrt_of(2));

  auto mixed = binary_real_tangents(xy("x^3 - x^2*y"));
  ASSERT_EQ(mixed.rational_linear.size(), 2u);
  EXPECT_EQ(mixed.rational_linear[0].to_string(), "[0:1]");
  EXPECT_EQ(mixed.rational_linear[0].multiplicity, 2);
  EXPECT_EQ(mixed.rational_linear[1].to_string(), "[1:1]");
}

TEST(Tangents, ProductReconstructsForm) {
  Polynomial F = xy("x^5*y - 3*x^3*y^3 + 2*x*y^5 + x^4*y^2");
  auto fac = binary_real_tangents(F);
  Polynomial X = Polynomial::variable("x", {"x", "y"}), Y = Polynomial::variable("y", {"x", "y"});
  Polynomial prod = fac.irreducible_remainder;
  for (const auto& d : fac.rational_linear)
    prod = prod * power(X * d.y - Y * d.x, d.multiplicity);
  // Equal up to a nonzero constant.
  Coefficient ratio = F.terms().begin()->second / prod.coeff(F.terms().begin()->first);
  EXPECT_EQ(prod * ratio, F);
}

TEST(Tangents, UnsupportedRealCubic) {
  auto fac = binary_real_tangents(xy("x^3 - 2*y^3"));
  EXPECT_TRUE(fac.rational_linear.empty());
  EXPECT_TRUE(fac.has_unsupported_real_roots);
  EXPECT_EQ(fac.remainder_degrees, std::vector<int>{3});
}

TEST(Tangents, OverQuadraticField) {
  // (x - sqrt2 y)^2 (x + y) over Q(sqrt2).
  Polynomial F = parse("x^3 - 2*sqrt(2)*x^2*y + x^2*y + 2*x*y^2 - 2*sqrt(2)*x*y^2 + 2*y^3", {"x", "y"});
  auto fac = binary_real_tangents(F);
  ASSERT_EQ(fac.rational_linear.size(), 2u);
  EXPECT_EQ(fac.rational_linear[0].x, Coefficient(-1));
  EXPECT_EQ(fac.rational_linear[1].x, Coefficient::sqrt_of(2));
  EXPECT_EQ(fac.rational_linear[1].multiplicity, 2);
  EXPECT_TRUE(fac.conjugate_closed);
}

TEST(NumericRoots, Accuracy) {
  auto z = numeric_roots(rp({6, -5, 1}));
  ASSERT_EQ(z.size(), 2u);
  EXPECT_NEAR(static_cast<double>(z[0].real()), 2.0, 1e-14);
  EXPECT_NEAR(static_cast<double>(z[1].real()), 3.0, 1e-14);
  auto c = numeric_roots(rp({1, 0, 1}));
  EXPECT_NEAR(static_cast<double>(std::abs(c[0].imag())), 1.0, 1e-14);
}

TEST(TruncatedBinomial, Examples) {
  EXPECT_EQ(truncated_binomial(3, 2), rp({1, 3, 3}));
  EXPECT_TRUE(truncated_binomial_positive(3, 2));
  EXPECT_EQ(truncated_binomial(5, 4), rp({1, 5, 10, 10, 5}));
  EXPECT_TRUE(truncated_binomial_positive(5, 4));
  EXPECT_EQ(SturmSequence(truncated_binomial(5, 4)).count_all(), 0);
  // f_{2r+1,2r} = (1+t)^(2r+1) - t^(2r+1)
  for (int r = 1; r <= 4; ++r) {
    RatPoly onep = RatPoly::constant(1);
    for (int i = 0; i < 2 * r + 1; ++i) onep = onep * rp({1, 1});
    std::vector<mpq_class> top(2 * r + 2, 0);
    top.back() = 1;
    EXPECT_EQ(truncated_binomial(2 * r + 1, 2 * r), onep - RatPoly(top));
  }
  EXPECT_FALSE(truncated_binomial_positive(4, 3));  // odd degree
  EXPECT_THROW(truncated_binomial(2, 3), InputError);
}

TEST(TruncatedBinomial, DerivativeAndPascal) {
  for (int n = 1; n <= 12; ++n)
    for (int r = 1; r <= n; ++r) {
      EXPECT_EQ(truncated_binomial(n, r).derivative(),
                truncated_binomial(n - 1, r - 1).scaled(mpq_class(n)));
      if (r < n)
        EXPECT_EQ(truncated_binomial(n, r),
                  truncated_binomial(n - 1, r) + rp({0, 1}) * truncated_binomial(n - 1, r - 1));
    }
}

TEST(TruncatedBinomial, PositiveBelowHalf) {
  for (int n = 1; n <= 20; ++n)
    for (int r = 0; 2 * r < n; ++r) EXPECT_TRUE(truncated_binomial_positive(n, 2 * r)) << n << "," << r;
}

TEST(TruncatedBinomial, HomogeneousForm) {
  Polynomial F = truncated_binomial_form(3, 2);
  EXPECT_EQ(F, parse("t2^2 + 3*t1*t2 + 3*t1^2", {"t1", "t2"}));
}
