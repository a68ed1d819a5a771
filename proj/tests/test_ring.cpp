#include <gtest/gtest.h>

#include "support.hpp"

using namespace tjt;

namespace {

RingPtr xyz() { return local_ring("x,y,z"); }

Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  std::size_t i = 0;
  for (int v : e) m.set(i++, Monomial::Exponent(v));
  return m;
}

}  // namespace

TEST(Parse, ReadsTermsInCanonicalOrder) {
  auto r = xyz();
  Poly p = poly(r, "x^2*y - 3*z");
  ASSERT_EQ(p.size(), 2u);
  // Local order: the lower degree term leads.
  EXPECT_EQ(p.terms()[0].mono, mono({0, 0, 1}));
  EXPECT_EQ(p.terms()[0].coeff, -3);
  EXPECT_EQ(p.terms()[1].mono, mono({2, 1, 0}));
  EXPECT_EQ(p.terms()[1].coeff, 1);
}

TEST(Parse, ZeroAndRationals) {
  auto r = xyz();
  EXPECT_TRUE(poly(r, "0").is_zero());
  EXPECT_TRUE(poly(r, "x - x").is_zero());
  Poly p = poly(r, "3/6*x + (x+y)*(x-y)");
  EXPECT_EQ(p, poly(r, "1/2*x + x^2 - y^2"));
}

TEST(Parse, BinomialFromTheFixtures) {
  auto r = local_ring("x,y");
  Poly p = poly(r, "x^4+y^3");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.leading_term().mono, mono({0, 3}));
}

TEST(Parse, ErrorsCarryPositions) {
  auto r = xyz();
  try {
    parse_poly("x + * y", r);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_poly("x + q", r), ParseError);
  EXPECT_THROW(parse_poly("x^", r), ParseError);
  EXPECT_THROW(parse_poly("(x + y", r), ParseError);
  EXPECT_THROW(parse_poly("1/0", r), ParseError);
}

TEST(Parse, ListPositionsAreAbsolute) {
  auto r = xyz();
  try {
    parse_poly_list("x, y, z + w", r);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_TRUE(parse_poly_list("  ", r).empty());
  EXPECT_EQ(parse_poly_list("(x+y)*(x-y), z", r).size(), 2u);
}

TEST(Ring, RejectsBadNames) {
  EXPECT_THROW(local_ring("x,x"), std::invalid_argument);
  EXPECT_THROW(local_ring("x,1y"), std::invalid_argument);
  EXPECT_THROW(local_ring("x,"), std::invalid_argument);
}

TEST(Ring, LocalAndGlobalBlocks) {
  auto S = RingContext::mixed({"a1", "a2"}, {"x", "y"});
  EXPECT_TRUE(S->is_mixed());
  EXPECT_FALSE(S->is_pure_local());
  Monomial one;
  EXPECT_GT(S->compare(Monomial::variable(0), one), 0);  // alpha > 1
  EXPECT_LT(S->compare(Monomial::variable(2), one), 0);  // x < 1
  auto r = xyz();
  EXPECT_LT(r->compare(mono({1, 0, 0}), one), 0);
  EXPECT_GT(r->compare(mono({0, 0, 1}), mono({1, 1, 0})), 0);
}

TEST(Ring, OrderAxiomsOnRandomTriples) {
  std::mt19937 rng(11);
  for (auto ring : {xyz(), RingContext::mixed({"a1", "a2"}, {"x", "y"})}) {
    std::size_t n = ring->size();
    for (int k = 0; k < 300; ++k) {
      Monomial a = random_monomial(rng, n, 0, 5), b = random_monomial(rng, n, 0, 5), c = random_monomial(rng, n, 0, 5);
      int ab = ring->compare(a, b), ba = ring->compare(b, a);
      EXPECT_EQ(ab, -ba);
      EXPECT_EQ(ab == 0, a == b);
      if (ab > 0 && ring->compare(b, c) > 0) EXPECT_GT(ring->compare(a, c), 0);
      if (ab != 0) EXPECT_EQ(ring->compare(a * c, b * c), ab);
    }
  }
}

TEST(Poly, RingAxiomsOnRandomPolys) {
  std::mt19937 rng(12);
  auto r = xyz();
  for (int k = 0; k < 50; ++k) {
    Poly f = random_poly(rng, r, 3, 0, 3), g = random_poly(rng, r, 3, 0, 3), h = random_poly(rng, r, 2, 0, 3);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Poly, UnitsInTheLocalRing) {
  auto r = xyz();
  EXPECT_TRUE(poly(r, "1 + x").is_unit());
  EXPECT_TRUE(poly(r, "-2 + x*y").is_unit());
  EXPECT_FALSE(poly(r, "x + y^2").is_unit());
  EXPECT_FALSE(poly(r, "0").is_unit());
}

TEST(Derivative, Fixtures) {
  auto r = local_ring("x,y,z,w");
  EXPECT_EQ(partial_derivative(poly(r, "x*w^2 - y*z^2"), 3), poly(r, "2*x*w"));
  EXPECT_TRUE(partial_derivative(poly(r, "7"), 0).is_zero());
  auto r2 = local_ring("x,y");
  EXPECT_EQ(partial_derivative(poly(r2, "x^4+y^3"), 0), poly(r2, "4*x^3"));
  EXPECT_THROW(partial_derivative(poly(r2, "x"), 2), std::out_of_range);
}

TEST(Derivative, LeibnizAndLinearity) {
  std::mt19937 rng(13);
  auto r = xyz();
  for (int k = 0; k < 50; ++k) {
    Poly f = random_poly(rng, r, 3, 0, 4), g = random_poly(rng, r, 3, 0, 4);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(partial_derivative(f * g, i), f * partial_derivative(g, i) + g * partial_derivative(f, i));
      EXPECT_EQ(partial_derivative(f + g, i), partial_derivative(f, i) + partial_derivative(g, i));
    }
  }
}

TEST(Order, OrdPoly) {
  auto r = local_ring("x,y");
  EXPECT_EQ(ord_poly(poly(r, "x^2*y + y^5")), 3);
  EXPECT_EQ(ord_poly(poly(r, "0")), std::nullopt);
  EXPECT_EQ(ord_poly(poly(r, "x^4+y^3")), 3);
  auto S = RingContext::mixed({"a1"}, {"x"});
  EXPECT_THROW(ord_poly(Poly::variable(S, 1)), ContextMismatch);
}

TEST(Order, SubstituteLocalsZero) {
  auto S = RingContext::mixed({"a1", "a2"}, {"x", "y"});
  EXPECT_TRUE(substitute_locals_zero(parse_poly("x*a2 + 3*y^2*a1", S)).is_zero());
  EXPECT_EQ(substitute_locals_zero(parse_poly("a2^2 - 12*x^2*y*a1^2", S)), parse_poly("a2^2", S));
  EXPECT_EQ(substitute_locals_zero(parse_poly("5", S)), parse_poly("5", S));
}

TEST(Parse, PrintThenParseIsIdentity) {
  std::mt19937 rng(14);
  for (auto r : {xyz(), RingContext::mixed({"a1", "a2"}, {"x", "y"})}) {
    for (int k = 0; k < 100; ++k) {
      Poly f = random_poly(rng, r, 4, 0, 5);
      EXPECT_EQ(parse_poly(f.to_string(), r), f) << f.to_string();
    }
  }
}

TEST(Poly, MixingRingsIsRejected) {
  auto a = local_ring("x,y"), b = local_ring("x,y,z");
  EXPECT_THROW(Poly::variable(a, 0) + Poly::variable(b, 0), ContextMismatch);
}
