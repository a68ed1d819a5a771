#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace tjt;

namespace {

Ideal irreducible_monomial(const RingPtr& r, const std::vector<std::pair<std::size_t, int>>& powers,
                           std::vector<Monomial>* out = nullptr) {
  std::vector<Monomial> ms;
  for (auto [v, e] : powers) ms.push_back(Monomial::variable(v, Monomial::Exponent(e)));
  if (out) *out = ms;
  return oracle::monomial_ideal(r, ms);
}

/// A random irreducible monomial ideal: a nonempty set of variables with
/// exponents in [1, max_exp].
std::vector<std::pair<std::size_t, int>> random_powers(std::mt19937& rng, std::size_t n, int max_exp) {
  std::vector<std::pair<std::size_t, int>> out;
  std::uniform_int_distribution<int> coin(0, 1), e(1, max_exp);
  while (out.empty())
    for (std::size_t v = 0; v < n; ++v)
      if (coin(rng)) out.push_back({v, e(rng)});
  return out;
}

/// Binomial ideal (m1 + c m2, m3) with m2 of higher degree than m1.
Ideal random_binomial(std::mt19937& rng, const RingPtr& r) {
  std::size_t n = r->size();
  Monomial m1 = random_monomial(rng, n, 1, 2);
  Monomial m2 = random_monomial(rng, n, 3, 4);
  Monomial m3 = random_monomial(rng, n, 1, 3);
  return Ideal(r, {Poly::monomial(r, m1) + Poly::monomial(r, m2, random_rational(rng)), Poly::monomial(r, m3)});
}

}  // namespace

TEST(Tjurina, OfPolyFixtures) {
  auto r3 = local_ring("x,y,z");
  EXPECT_TRUE(ideal_equal(tjurina_of_poly(poly(r3, "x*y*z")), ideal(r3, "y*z, x*z, x*y")));
  EXPECT_TRUE(tjurina_of_poly(poly(r3, "0")).is_zero());
  EXPECT_TRUE(tjurina_of_poly(poly(r3, "x")).is_unit());
  auto r4 = local_ring("x,y,z,w");
  EXPECT_TRUE(ideal_equal(tjurina_of_poly(poly(r4, "x*w^2 - y*z^2")), ideal(r4, "y*z, z^2, x*w, w^2")));
  auto S = RingContext::mixed({"a1"}, {"x"});
  EXPECT_THROW(tjurina_of_poly(parse_poly("x*a1", S)), ContextMismatch);
}

TEST(Tjurina, OfIdealFixtures) {
  auto r = local_ring("x,y");
  EXPECT_TRUE(ideal_equal(tjurina_of_ideal(ideal(r, "x^3, x^2*y, x*y^2, y^3")), ideal_power(maximal_ideal(r), 2)));
  EXPECT_TRUE(tjurina_of_ideal(Ideal::zero(r)).is_zero());
  EXPECT_TRUE(ideal_equal(tjurina_of_ideal(ideal(r, "5*x*y^3 + x^5, 4*x^4*y + y^4, x^2*y^2, x*y^4, x^5*y")),
                          ideal(r, "x^2*y, x*y^2, x^4 + y^3, x^5")));
}

TEST(Delta, SessionFixture) {
  auto r = local_ring("x,y,z");
  Ideal d = antiderivatives(ideal(r, "x^2, x*y, y*z, z^2, y^2 - x*z"));
  EXPECT_TRUE(ideal_equal(d, ideal(r, "x^3, x^2*y, 2*x*y^2 - x^2*z, y^3 - 3*x*y*z, 2*y^2*z - x*z^2, y*z^2, z^3, x^2*z^2")));
}

TEST(Delta, PowersOfTheMaximalIdeal) {
  for (const char* names : {"x,y", "x,y,z"}) {
    auto r = local_ring(names);
    for (unsigned k = 1; k <= 3; ++k) {
      Ideal mk = ideal_power(maximal_ideal(r), k);
      EXPECT_TRUE(ideal_equal(antiderivatives(mk), ideal_power(maximal_ideal(r), k + 1))) << names << " k=" << k;
    }
  }
}

TEST(Delta, ChainFixture) {
  auto r = local_ring("x,y");
  Ideal d = antiderivatives(ideal(r, "x*y, x^4 + y^3"));
  EXPECT_TRUE(ideal_equal(d, ideal(r, "5*x*y^3 + x^5, 4*x^4*y + y^4, x^2*y^2, x*y^4, x^5*y")));
  // The five listed generators are not minimal: xy^4 and x^5y lie in m Delta(I).
  EXPECT_EQ(d.size(), 3u);
}

TEST(Delta, PrincipalAndIrreducibleMonomial) {
  auto r = local_ring("x,y");
  EXPECT_TRUE(ideal_equal(antiderivatives(ideal(r, "x*y")), ideal(r, "x^2*y^2")));
  auto r4 = local_ring("x,y,z,w");
  EXPECT_TRUE(ideal_equal(antiderivatives(ideal(r4, "z, w")), ideal(r4, "z^2, z*w, w^2")));
}

TEST(Delta, TrivialIdeals) {
  auto r = local_ring("x,y");
  EXPECT_TRUE(antiderivatives(Ideal::zero(r)).is_zero());
  EXPECT_TRUE(antiderivatives(Ideal::unit(r)).is_unit());
  EXPECT_TRUE(antiderivatives(ideal(r, "1 + x")).is_unit());
}

TEST(Delta, EveryGeneratorIsAnAntiderivative) {
  auto r = local_ring("x,y,z");
  Ideal I = ideal(r, "x^2, x*y, y*z, z^2, y^2 - x*z");
  Ideal d = antiderivatives(I);
  for (const auto& g : d.generators()) EXPECT_TRUE(ideal_contains(I, tjurina_of_poly(g)));
}

TEST(Delta, MembershipCharacterization) {
  std::mt19937 rng(31);
  auto r = local_ring("x,y");
  for (int k = 0; k < 8; ++k) {
    auto gens = random_m_primary(rng, r);
    Ideal I(r, gens), d = antiderivatives(I);
    Ideal I2 = ideal_product(I, I);
    for (int t = 0; t < 6; ++t) {
      Poly g = t < 2 ? random_combination(rng, gens) : t < 4 ? random_combination(rng, I2.generators()) : random_poly(rng, r, 3, 1, 5);
      if (t == 5) g = g + random_combination(rng, gens);
      bool expected = ideal_contains(I, g);
      for (std::size_t j = 0; j < 2 && expected; ++j) expected = ideal_contains(I, partial_derivative(g, j));
      EXPECT_EQ(ideal_contains(d, g), expected) << I.to_string() << " g=" << g.to_string();
    }
  }
}

TEST(Delta, IrreducibleMonomialClosedForm) {
  std::mt19937 rng(32);
  for (int k = 0; k < 12; ++k) {
    std::size_t n = 2 + k % 3;
    auto r = local_ring(n == 2 ? "x,y" : n == 3 ? "x,y,z" : "x,y,z,w");
    std::vector<Monomial> ms;
    Ideal I = irreducible_monomial(r, random_powers(rng, n, 4), &ms);
    Ideal d = antiderivatives(I);
    EXPECT_TRUE(ideal_equal(d, oracle::monomial_ideal(r, oracle::delta_irreducible_monomial(ms)))) << I.to_string();
    // Primary: every variable of the support has a pure power in Delta(I).
    for (const auto& m : ms)
      for (std::size_t v = 0; v < n; ++v)
        if (m[v]) EXPECT_TRUE(ideal_contains(d, Poly::monomial(r, Monomial::variable(v, Monomial::Exponent(2 * m[v])))));
  }
}

TEST(Delta, GeneratorIndependence) {
  std::mt19937 rng(33);
  auto r = local_ring("x,y");
  for (int k = 0; k < 6; ++k) {
    auto gens = random_m_primary(rng, r);
    auto other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    other.push_back(random_combination(rng, gens));
    EXPECT_TRUE(ideal_equal(antiderivatives(Ideal(r, gens)), antiderivatives(Ideal(r, other))));
    EXPECT_TRUE(ideal_equal(tjurina_of_ideal(Ideal(r, gens)), tjurina_of_ideal(Ideal(r, other))));
  }
}

TEST(Order, IdealFixtures) {
  auto r = local_ring("x,y");
  EXPECT_EQ(ord_ideal(ideal_power(maximal_ideal(r), 2)), 2);
  EXPECT_EQ(ord_ideal(ideal(r, "x*y, x^4 + y^3")), 2);
  EXPECT_EQ(ord_ideal(Ideal::zero(r)), std::nullopt);
  EXPECT_EQ(ord_ideal(Ideal::unit(r)), 0);
}

TEST(TFull, Fixtures) {
  auto r = local_ring("x,y");
  TFullness chain = t_fullness(ideal(r, "x*y, x^4 + y^3"));
  EXPECT_FALSE(chain.full);
  EXPECT_TRUE(ideal_equal(chain.t_delta, ideal(r, "x^2*y, x*y^2, x^4 + y^3, x^5")));
  EXPECT_FALSE(ideal_contains(chain.t_delta, poly(r, "x*y")));
  EXPECT_TRUE(is_T_full(ideal_power(maximal_ideal(r), 2)));
  auto r4 = local_ring("x,y,z,w");
  EXPECT_TRUE(is_T_full(ideal(r4, "y*z, z^2, x*w, z*w, w^2")));
}

TEST(Ladder, TjurinaOfSumsAndProducts) {
  std::mt19937 rng(34);
  auto r = local_ring("x,y");
  Poly one_plus_x = poly(r, "1 + x");
  for (int k = 0; k < 10; ++k) {
    Poly f = random_poly(rng, r, 3, 1, 4), g = random_poly(rng, r, 3, 1, 4);
    Ideal Tf = tjurina_of_poly(f), Tg = tjurina_of_poly(g);
    EXPECT_TRUE(ideal_contains(ideal_sum(Tf, Tg), tjurina_of_poly(f + g)));
    Ideal mixed = ideal_sum(ideal_product(Ideal(r, {f}), Tg), ideal_product(Ideal(r, {g}), Tf));
    EXPECT_TRUE(ideal_contains(mixed, tjurina_of_poly(f * g)));
    EXPECT_TRUE(ideal_contains(ideal_product(Tf, Tg), mixed));
    EXPECT_TRUE(ideal_contains(Tf, ideal_product(Tf, Tg)));
    EXPECT_TRUE(ideal_contains(Tg, ideal_product(Tf, Tg)));
    EXPECT_TRUE(ideal_equal(tjurina_of_poly(one_plus_x * f), Tf));
  }
}

TEST(Ladder, TjurinaOfIdeals) {
  std::mt19937 rng(35);
  auto r = local_ring("x,y");
  for (int k = 0; k < 8; ++k) {
    Ideal J1(r, random_m_primary(rng, r));
    Ideal J2(r, {J1.generators()[0] * random_poly(rng, r, 2, 0, 1) + J1.generators()[1]});
    Ideal J3(r, random_m_primary(rng, r));
    EXPECT_TRUE(ideal_contains(tjurina_of_ideal(J1), J1));
    EXPECT_TRUE(ideal_contains(tjurina_of_ideal(J1), tjurina_of_ideal(J2)));  // J2 inside J1
    std::vector<Poly> sum = J1.generators();
    sum.insert(sum.end(), J3.generators().begin(), J3.generators().end());
    EXPECT_TRUE(ideal_equal(tjurina_of_ideal(Ideal(r, sum)), ideal_sum(tjurina_of_ideal(J1), tjurina_of_ideal(J3))));
    Ideal Tcap = tjurina_of_ideal(ideal_intersect({J1, J3}));
    EXPECT_TRUE(ideal_contains(tjurina_of_ideal(J1), Tcap));
    EXPECT_TRUE(ideal_contains(tjurina_of_ideal(J3), Tcap));
  }
}

TEST(Ladder, DeltaOnMonomialAndBinomialFamilies) {
  std::mt19937 rng(36);
  auto r = local_ring("x,y,z");
  for (int k = 0; k < 8; ++k) {
    Ideal A = k % 2 ? random_binomial(rng, r) : irreducible_monomial(r, random_powers(rng, 3, 3));
    Ideal B = irreducible_monomial(r, random_powers(rng, 3, 3));
    Ideal dA = antiderivatives(A), dB = antiderivatives(B);
    EXPECT_TRUE(ideal_contains(A, dA));
    EXPECT_TRUE(ideal_contains(dA, ideal_product(A, A)));
    EXPECT_TRUE(ideal_equal(antiderivatives(ideal_intersect({A, B})), ideal_intersect({dA, dB}))) << A.to_string() << B.to_string();
    Ideal AB = ideal_product(A, B);  // AB inside A
    EXPECT_TRUE(ideal_contains(dA, antiderivatives(AB)));
    EXPECT_GE(ord_ideal(dA).value(), ord_ideal(A).value() + 1);
  }
}
