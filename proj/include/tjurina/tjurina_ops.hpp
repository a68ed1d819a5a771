#pragma once

#include <optional>
#include <vector>

#include "tjurina/ideal.hpp"

namespace tjurina {

/// T(f) = (f, df/dx_1, ..., df/dx_n).
inline Ideal tjurina_of_poly(const Poly& f) {
  const RingPtr& ring = f.ring();
  if (!ring->is_pure_local()) throw ContextMismatch("tjurina_of_poly: expects a pure local ring");
  std::vector<Poly> gens{f};
  for (std::size_t i = 0; i < ring->size(); ++i) gens.push_back(partial_derivative(f, i));
  return Ideal(ring, std::move(gens));
}

/// T(J) = T(g_1) + ... + T(g_q) over the given generators.
inline Ideal tjurina_of_ideal(const Ideal& J) {
  const RingPtr& ring = J.ring();
  if (!ring->is_pure_local()) throw ContextMismatch("tjurina_of_ideal: expects a pure local ring");
  std::vector<Poly> gens;
  for (const auto& g : J.generators()) {
    if (g.is_zero()) continue;
    gens.push_back(g);
    for (std::size_t i = 0; i < ring->size(); ++i) {
      Poly d = partial_derivative(g, i);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  return Ideal(ring, std::move(gens));
}

/// The module M of coefficient vectors a with <a, f> in Delta(I), i.e. the
/// a with sum_k a_k df_k/dx_j in I for every j, as one modulo computation
/// against I F_n.
inline Submodule antiderivative_module(const Ideal& I) {
  const RingPtr& ring = I.ring();
  const auto& f = I.generators();
  std::size_t n = ring->size();
  if (n == 0) return Submodule::free_module(ring, f.size());
  std::vector<VectorPoly> columns;
  for (const auto& g : f) {
    std::vector<Poly> c;
    for (std::size_t j = 0; j < n; ++j) c.push_back(partial_derivative(g, j));
    columns.push_back(VectorPoly(ring, std::move(c)));
  }
  std::vector<VectorPoly> target;
  for (const auto& h : f)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Poly> c(n, Poly(ring));
      c[j] = h;
      target.push_back(VectorPoly(ring, std::move(c)));
    }
  return modulo(columns, Submodule(ring, n, std::move(target)));
}

/// Delta(I) = {g : T(g) in I}, generated by <m, f> for generators m of the
/// antiderivative module. The returned generating set is minimal.
inline Ideal antiderivatives(const Ideal& I) {
  const RingPtr& ring = I.ring();
  if (!ring->is_pure_local()) throw ContextMismatch("antiderivatives: expects a pure local ring");
  std::vector<Poly> f;
  for (const auto& g : I.generators())
    if (!g.is_zero()) f.push_back(g);
  if (f.empty()) return Ideal::zero(ring);
  if (I.is_unit()) return Ideal::unit(ring);
  Ideal In(ring, f);
  std::vector<Poly> gens;
  Submodule M = antiderivative_module(In);
  for (const auto& m : M.generators()) {
    Poly g = pairing(m, f);
    if (g.is_zero()) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  return minimal_generators(Ideal(ring, std::move(gens)));
}

/// ord(I) = max{k : I in m^k}; nullopt for the zero ideal.
inline std::optional<int> ord_ideal(const Ideal& I) {
  std::optional<int> best;
  for (const auto& g : I.generators()) {
    auto o = ord_poly(g);
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

struct TFullness {
  bool full = false;
  Ideal delta;    // Delta(I)
  Ideal t_delta;  // T(Delta(I)), always contained in I
};

/// I is T-full when I = T(Delta(I)).
inline TFullness t_fullness(const Ideal& I) {
  TFullness r;
  r.delta = antiderivatives(I);
  r.t_delta = tjurina_of_ideal(r.delta);
  r.full = ideal_contains(r.t_delta, I);
  return r;
}

inline bool is_T_full(const Ideal& I) { return t_fullness(I).full; }

}  // namespace tjurina
