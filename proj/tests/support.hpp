#pragma once

// Shared helpers for the test binaries: parsing shortcuts and seeded random
// polynomials.

#include <random>
#include <string>
#include <vector>

#include "tjurina.hpp"

namespace tjt {

using namespace tjurina;

inline RingPtr local_ring(const std::string& names) { return RingContext::local(parse_name_list(names)); }

inline Ideal ideal(const RingPtr& ring, const std::string& gens) { return Ideal(ring, parse_poly_list(gens, ring)); }

inline Poly poly(const RingPtr& ring, const std::string& src) { return parse_poly(src, ring); }

inline Monomial random_monomial(std::mt19937& rng, std::size_t n, int min_deg, int max_deg) {
  int d = std::uniform_int_distribution<int>(min_deg, max_deg)(rng);
  Monomial m;
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  for (int k = 0; k < d; ++k) {
    std::size_t v = var(rng);
    m.set(v, Monomial::Exponent(m[v] + 1));
  }
  return m;
}

inline Rational random_rational(std::mt19937& rng, int bound = 5, int max_den = 3) {
  int num = 0;
  while (num == 0) num = std::uniform_int_distribution<int>(-bound, bound)(rng);
  int den = std::uniform_int_distribution<int>(1, max_den)(rng);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Sum of `terms` random terms with degrees in [min_deg, max_deg].
inline Poly random_poly(std::mt19937& rng, const RingPtr& ring, int terms, int min_deg, int max_deg) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) ts.push_back({random_monomial(rng, ring->size(), min_deg, max_deg), random_rational(rng)});
  return Poly::from_terms(ring, std::move(ts));
}


/// (x^a + h1, y^b + h2, g) in two variables with h1, h2 of higher order and
/// a, b <= 3, so the colength is at most 9.
inline std::vector<Poly> random_m_primary(std::mt19937& rng, const RingPtr& ring) {
  std::uniform_int_distribution<int> e(1, 3), coin(0, 1);
  int a = e(rng), b = e(rng);
  Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
  std::vector<Poly> gens{x.pow(a) + random_poly(rng, ring, 1 + coin(rng), a + 1, a + 2),
                         y.pow(b) + random_poly(rng, ring, 1 + coin(rng), b + 1, b + 2)};
  if (coin(rng)) gens.push_back(random_poly(rng, ring, 2, 2, 3));
  return gens;
}

/// Sum of r_k g_k with random multipliers r_k.
inline Poly random_combination(std::mt19937& rng, const std::vector<Poly>& gens, int max_deg = 2) {
  Poly out(gens.front().ring());
  for (const auto& g : gens) out += random_poly(rng, g.ring(), 2, 0, max_deg) * g;
  return out;
}

/// Another generating set of the same ideal: the generators shuffled, one of
/// them multiplied by a unit 1 + c x_j, and a constant combination of two of
/// them appended.
inline std::vector<Poly> unit_scaled_presentation(std::mt19937& rng, const std::vector<Poly>& gens) {
  const RingPtr& ring = gens.front().ring();
  std::vector<Poly> out = gens;
  std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1), var(0, ring->size() - 1);
  std::uniform_int_distribution<int> coeff(1, 3);
  auto sign = [&] { return rng() % 2 ? 1 : -1; };
  Poly unit = Poly::constant(ring, Rational(1)) + Poly::variable(ring, var(rng)) * Poly::constant(ring, Rational(sign() * coeff(rng)));
  out[pick(rng)] *= unit;
  Poly extra = gens[pick(rng)] * Poly::constant(ring, Rational(sign() * coeff(rng))) +
               gens[pick(rng)] * Poly::constant(ring, Rational(sign() * coeff(rng)));
  if (!extra.is_zero()) out.push_back(extra);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace tjt
