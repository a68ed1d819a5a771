#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tjurina/standard_basis.hpp"

namespace tjurina {

/// Element of a free module F_l over the localized ring.
class VectorPoly {
 public:
  VectorPoly() = default;
  VectorPoly(RingPtr ring, std::vector<Poly> entries) : ring_(std::move(ring)), entries_(std::move(entries)) {
    for (const auto& e : entries_) require_same_ring(ring_, e.ring(), "VectorPoly");
  }
  static VectorPoly zero(const RingPtr& ring, std::size_t rank) {
    return VectorPoly(ring, std::vector<Poly>(rank, Poly(ring)));
  }
  static VectorPoly unit_vector(const RingPtr& ring, std::size_t rank, std::size_t k) {
    auto v = zero(ring, rank);
    v.entries_.at(k) = Poly::constant(ring, 1);
    return v;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return entries_.size(); }
  const Poly& operator[](std::size_t k) const { return entries_.at(k); }
  const std::vector<Poly>& entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
  }

  VectorPoly operator+(const VectorPoly& o) const {
    check_rank(o);
    VectorPoly r = *this;
    for (std::size_t k = 0; k < rank(); ++k) r.entries_[k] += o.entries_[k];
    return r;
  }
  VectorPoly operator-(const VectorPoly& o) const {
    check_rank(o);
    VectorPoly r = *this;
    for (std::size_t k = 0; k < rank(); ++k) r.entries_[k] -= o.entries_[k];
    return r;
  }
  VectorPoly operator*(const Poly& c) const {
    VectorPoly r = *this;
    for (auto& e : r.entries_) e *= c;
    return r;
  }

  bool operator==(const VectorPoly& o) const { return entries_ == o.entries_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k) s += ", ";
      s += entries_[k].to_string();
    }
    return s + "]";
  }

 private:
  void check_rank(const VectorPoly& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("VectorPoly rank mismatch");
  }

  RingPtr ring_;
  std::vector<Poly> entries_;
};

/// <b, c> = sum_k b_k c_k.
inline Poly pairing(const VectorPoly& b, std::span<const Poly> c) {
  if (b.rank() != c.size()) throw std::invalid_argument("pairing: rank mismatch");
  Poly s(b.ring());
  for (std::size_t k = 0; k < c.size(); ++k) s += b[k] * c[k];
  return s;
}

namespace detail {

inline engine::ModPoly to_mod(const Poly& p, std::uint32_t comp = 0) {
  engine::ModPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono, comp, t.coeff});
  return out;
}

// Poly terms are already sorted for a single component.
inline engine::ModPoly to_mod(const VectorPoly& v, std::uint32_t offset, const engine::ModuleOrder& ord) {
  engine::ModPoly out;
  for (std::size_t k = 0; k < v.rank(); ++k)
    for (const auto& t : v[k].terms()) out.push_back({t.mono, std::uint32_t(offset + k), t.coeff});
  engine::normalize(out, ord);
  return out;
}

inline Poly from_mod(const engine::ModPoly& p, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) {
    if (t.comp != 0) throw std::logic_error("from_mod: nonzero component in ideal element");
    terms.push_back({t.mono, t.coeff});
  }
  return Poly::from_terms(ring, std::move(terms));
}

inline VectorPoly from_mod(const engine::ModPoly& p, const RingPtr& ring, std::size_t rank) {
  std::vector<std::vector<Term>> comps(rank);
  for (const auto& t : p) comps.at(t.comp).push_back({t.mono, t.coeff});
  std::vector<Poly> entries;
  for (auto& c : comps) entries.push_back(Poly::from_terms(ring, std::move(c)));
  return VectorPoly(ring, std::move(entries));
}

struct CotangentData {
  std::vector<engine::ModPoly> basis;    // E, monic
  std::vector<engine::ModPoly> reducers; // E followed by a standard basis of mI, cut at top_degree
  int top_degree = -1;
};

struct StdCache {
  std::once_flag once;
  std::vector<engine::ModPoly> basis;
  std::once_flag cotangent_once;
  CotangentData cotangent;
};

}  // namespace detail

/// Ideal of the localized ring, given by generators. Equality is
/// mathematical (see ideal_equal), never list equality. The standard basis is
/// computed once on first use and shared between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<detail::StdCache>()) {
    for (const auto& g : gens_) require_same_ring(ring_, g.ring(), "Ideal");
  }

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Poly::constant(ring, 1)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  const std::vector<engine::ModPoly>& std_terms() const {
    std::call_once(cache_->once, [this] {
      std::vector<engine::ModPoly> gens;
      for (const auto& g : gens_)
        if (!g.is_zero()) gens.push_back(detail::to_mod(g));
      cache_->basis = engine::standard_basis(gens, engine::ModuleOrder(ring_));
    });
    return cache_->basis;
  }

  std::vector<Poly> standard_basis() const {
    std::vector<Poly> out;
    for (const auto& g : std_terms()) out.push_back(detail::from_mod(g, ring_));
    return out;
  }

  /// Data for coordinates on I/mI; pure local rings only.
  const detail::CotangentData& cotangent_data() const;

  bool is_zero() const { return std_terms().empty(); }
  bool is_unit() const {
    for (const auto& g : std_terms())
      if (g.front().mono.is_one()) return true;
    return false;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (k) s += ", ";
      s += gens_[k].to_string();
    }
    return s + ")";
  }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<detail::StdCache> cache_;
};

/// Submodule of F_rank given by generators, with a lazily cached standard basis.
class Submodule {
 public:
  Submodule() = default;
  Submodule(RingPtr ring, std::size_t rank, std::vector<VectorPoly> gens)
      : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)), cache_(std::make_shared<detail::StdCache>()) {
    for (const auto& g : gens_) {
      require_same_ring(ring_, g.ring(), "Submodule");
      if (g.rank() != rank_) throw std::invalid_argument("Submodule: generator rank mismatch");
    }
  }

  static Submodule free_module(const RingPtr& ring, std::size_t rank) {
    std::vector<VectorPoly> gens;
    for (std::size_t k = 0; k < rank; ++k) gens.push_back(VectorPoly::unit_vector(ring, rank, k));
    return Submodule(ring, rank, std::move(gens));
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VectorPoly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  const std::vector<engine::ModPoly>& std_terms() const {
    std::call_once(cache_->once, [this] {
      engine::ModuleOrder ord(ring_);
      std::vector<engine::ModPoly> gens;
      for (const auto& g : gens_)
        if (!g.is_zero()) gens.push_back(detail::to_mod(g, 0, ord));
      cache_->basis = engine::standard_basis(gens, ord);
    });
    return cache_->basis;
  }

  std::vector<VectorPoly> standard_basis() const {
    std::vector<VectorPoly> out;
    for (const auto& g : std_terms()) out.push_back(detail::from_mod(g, ring_, rank_));
    return out;
  }

 private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<VectorPoly> gens_;
  std::shared_ptr<detail::StdCache> cache_;
};

// ---------------------------------------------------------------------------
// Membership and equality

/// Weak normal form of f against a standard basis of I.
inline Poly normal_form(const Poly& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "normal_form");
  engine::ModuleOrder ord(I.ring());
  return detail::from_mod(engine::mora_normal_form(detail::to_mod(f), I.std_terms(), ord), I.ring());
}

inline VectorPoly normal_form(const VectorPoly& v, const Submodule& M) {
  require_same_ring(v.ring(), M.ring(), "normal_form");
  if (v.rank() != M.rank()) throw std::invalid_argument("normal_form: rank mismatch");
  engine::ModuleOrder ord(M.ring());
  return detail::from_mod(engine::mora_normal_form(detail::to_mod(v, 0, ord), M.std_terms(), ord), M.ring(),
                          M.rank());
}

inline bool ideal_contains(const Ideal& I, const Poly& f) {
  require_same_ring(f.ring(), I.ring(), "ideal_contains");
  engine::ModuleOrder ord(I.ring());
  return f.is_zero() || engine::module_contains(detail::to_mod(f), I.std_terms(), ord);
}

inline bool ideal_contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_contains");
  for (const auto& g : J.generators())
    if (!ideal_contains(I, g)) return false;
  return true;
}


inline bool submodule_contains(const Submodule& M, const VectorPoly& v) {
  require_same_ring(v.ring(), M.ring(), "submodule_contains");
  if (v.rank() != M.rank()) throw std::invalid_argument("submodule_contains: rank mismatch");
  engine::ModuleOrder ord(M.ring());
  return v.is_zero() || engine::module_contains(detail::to_mod(v, 0, ord), M.std_terms(), ord);
}

inline bool submodule_contains(const Submodule& M, const Submodule& N) {
  require_same_ring(M.ring(), N.ring(), "submodule_contains");
  if (M.rank() != N.rank()) throw std::invalid_argument("submodule_contains: rank mismatch");
  for (const auto& g : N.generators())
    if (!submodule_contains(M, g)) return false;
  return true;
}

inline bool submodule_equal(const Submodule& M, const Submodule& N) {
  return submodule_contains(M, N) && submodule_contains(N, M);
}

// ---------------------------------------------------------------------------
// Generator-level constructions

// ---------------------------------------------------------------------------
// The cotangent space I/mI
//
// E is the set of standard basis elements of I whose leading monomials are not
// leading monomials of mI; E is a minimal generating set and its images form
// a basis of I/mI. Reducing h in I against E and a standard basis of mI never
// lowers the degree of the leading monomial, and an element of I led above
// the top degree D of E lies in mI. Coordinates therefore only need the
// terms of degree at most D.

inline const detail::CotangentData& Ideal::cotangent_data() const {
  if (!ring_->is_pure_local()) throw ContextMismatch("cotangent space: expects a pure local ring");
  std::call_once(cache_->cotangent_once, [this] {
    engine::ModuleOrder ord(ring_);
    const auto& G = std_terms();
    std::vector<engine::ModPoly> mg;
    for (const auto& g : G)
      for (std::size_t v = 0; v < ring_->size(); ++v) {
        Monomial x = Monomial::variable(v);
        engine::ModPoly p = g;
        for (auto& t : p) t.mono = t.mono * x;
        mg.push_back(std::move(p));
      }
    std::vector<engine::ModPoly> lower = engine::standard_basis(mg, ord);
    detail::CotangentData d;
    for (const auto& g : G) {
      const Monomial& lm = g.front().mono;
      if (std::none_of(lower.begin(), lower.end(), [&](const engine::ModPoly& b) { return b.front().mono.divides(lm); })) {
        d.basis.push_back(g);
        d.top_degree = std::max(d.top_degree, lm.degree());
      }
    }
    d.reducers = d.basis;
    d.reducers.insert(d.reducers.end(), lower.begin(), lower.end());
    for (auto& r : d.reducers)
      std::erase_if(r, [&](const engine::ModTerm& t) { return t.mono.degree() > d.top_degree; });
    std::erase_if(d.reducers, [](const engine::ModPoly& r) { return r.empty(); });
    cache_->cotangent = std::move(d);
  });
  return cache_->cotangent;
}

/// Minimal generating set of I in the local ring (see above).
inline Ideal minimal_generators(const Ideal& I) {
  if (!I.ring()->is_pure_local()) throw ContextMismatch("minimal_generators: expects a pure local ring");
  std::vector<Poly> gens;
  for (const auto& e : I.cotangent_data().basis) gens.push_back(detail::from_mod(e, I.ring()));
  return Ideal(I.ring(), std::move(gens));
}

/// Coordinates of h + mI in the basis minimal_generators(I). h must lie in I;
/// throws std::invalid_argument when the reduction shows that it does not.
inline std::vector<Rational> cotangent_coordinates(const Ideal& I, const Poly& h) {
  require_same_ring(I.ring(), h.ring(), "cotangent_coordinates");
  const auto& d = I.cotangent_data();
  engine::ModuleOrder ord(I.ring());
  std::vector<Rational> c(d.basis.size());
  engine::ModPoly r = detail::to_mod(h);
  std::erase_if(r, [&](const engine::ModTerm& t) { return t.mono.degree() > d.top_degree; });
  while (!r.empty()) {
    const engine::ModTerm& lead = r.front();
    std::size_t k = 0;
    while (k < d.reducers.size() && !d.reducers[k].front().mono.divides(lead.mono)) ++k;
    if (k == d.reducers.size()) throw std::invalid_argument("cotangent_coordinates: " + h.to_string() + " is not in the ideal");
    const engine::ModPoly& g = d.reducers[k];
    Rational q = lead.coeff / g.front().coeff;
    if (k < d.basis.size() && g.front().mono == lead.mono) c[k] += q;
    r = engine::sub_scaled(r, q, lead.mono / g.front().mono, g, ord);
    std::erase_if(r, [&](const engine::ModTerm& t) { return t.mono.degree() > d.top_degree; });
  }
  return c;
}

/// Rank over Q of a list of equal-length vectors.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// A = B using only standard bases of B and mB: A lies in B and the
/// generators of A span B/mB (Nakayama). Pure local rings only.
inline bool ideal_equal_via(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring(), "ideal_equal_via");
  if (!B.ring()->is_pure_local()) throw ContextMismatch("ideal_equal_via: expects a pure local ring");
  if (!ideal_contains(B, A)) return false;
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : A.generators())
    if (!a.is_zero()) rows.push_back(cotangent_coordinates(B, a));
  return rational_rank(std::move(rows)) == B.cotangent_data().basis.size();
}

/// In a pure local ring only one side gets a standard basis: the one with
/// fewer terms in its generators.
inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_equal");
  if (!I.ring()->is_pure_local()) return ideal_contains(I, J) && ideal_contains(J, I);
  auto weight = [](const Ideal& X) {
    std::size_t w = 0;
    for (const auto& g : X.generators()) w += g.size();
    return w;
  };
  return weight(I) <= weight(J) ? ideal_equal_via(J, I) : ideal_equal_via(I, J);
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_sum");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_product");
  std::vector<Poly> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) {
      Poly p = a * b;
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_power(const Ideal& I, unsigned k) {
  Ideal r = Ideal::unit(I.ring());
  for (unsigned i = 0; i < k; ++i) r = ideal_product(r, I);
  return r;
}

/// Least c with m^c contained in I, or nothing when I is not m-primary.
/// Reads the leading monomials of a standard basis: for a local degree order,
/// m^c lies in I exactly when every monomial of degree c is a leading one.
inline std::optional<int> primary_exponent(const Ideal& I) {
  const RingPtr& ring = I.ring();
  if (!ring->is_pure_local()) throw ContextMismatch("primary_exponent: expects a pure local ring");
  std::size_t n = ring->size();
  std::vector<Monomial> leads;
  for (const auto& g : I.standard_basis()) leads.push_back(g.leading_term().mono);
  for (const auto& l : leads)
    if (l.degree() == 0) return 0;
  if (n == 0) return std::nullopt;
  int bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    int best = 0;
    for (const auto& l : leads)
      if (l.degree() == l[i] && (best == 0 || l[i] < best)) best = l[i];
    if (best == 0) return std::nullopt;
    bound += best - 1;
  }
  int c = bound;
  while (c > 1 && engine::covers_degree(leads, n, c - 1)) --c;
  return c;
}

/// The ideal generated by all variables of the ring.
inline Ideal maximal_ideal(const RingPtr& ring) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ring->size(); ++i) gens.push_back(Poly::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// Syzygy-based operations

/// Generators of {a : sum a_i G_i = 0}.
inline Submodule syzygies(const std::vector<VectorPoly>& G) {
  if (G.empty()) throw std::invalid_argument("syzygies: empty generator list");
  const RingPtr& ring = G.front().ring();
  std::size_t ell = G.front().rank();
  std::size_t k = G.size();
  engine::ModuleOrder plain(ring);
  std::vector<engine::ModPoly> sys;
  for (std::size_t i = 0; i < k; ++i) {
    require_same_ring(ring, G[i].ring(), "syzygies");
    if (G[i].rank() != ell) throw std::invalid_argument("syzygies: rank mismatch");
    auto v = detail::to_mod(G[i], 0, plain);
    v.push_back({Monomial(), std::uint32_t(ell + i), Rational(1)});
    sys.push_back(std::move(v));
  }
  std::vector<VectorPoly> out;
  for (const auto& s : engine::eliminate_components(sys, std::uint32_t(ell), ring))
    out.push_back(detail::from_mod(s, ring, k));
  return Submodule(ring, k, std::move(out));
}

inline Submodule syzygies(const std::vector<Poly>& G) {
  std::vector<VectorPoly> vs;
  for (const auto& g : G) vs.push_back(VectorPoly(g.ring(), {g}));
  return syzygies(vs);
}

/// {a in F_s : sum a_k A_k in B} for columns A_1..A_s of F_l and B in F_l.
inline Submodule modulo(const std::vector<VectorPoly>& A, const Submodule& B) {
  if (A.empty()) throw std::invalid_argument("modulo: empty column list");
  const RingPtr& ring = B.ring();
  std::size_t ell = B.rank();
  std::size_t s = A.size();
  engine::ModuleOrder plain(ring);
  std::vector<engine::ModPoly> sys;
  for (std::size_t k = 0; k < s; ++k) {
    require_same_ring(ring, A[k].ring(), "modulo");
    if (A[k].rank() != ell) throw std::invalid_argument("modulo: rank mismatch");
    auto v = detail::to_mod(A[k], 0, plain);
    v.push_back({Monomial(), std::uint32_t(ell + k), Rational(1)});
    sys.push_back(std::move(v));
  }
  for (const auto& b : B.generators()) sys.push_back(detail::to_mod(b, 0, plain));
  std::vector<VectorPoly> out;
  for (const auto& e : engine::eliminate_components(sys, std::uint32_t(ell), ring))
    out.push_back(detail::from_mod(e, ring, s));
  return Submodule(ring, s, std::move(out));
}

/// Ideal form: {a in F_s : <a, A> in B}.
inline Submodule modulo(const std::vector<Poly>& A, const Ideal& B) {
  std::vector<VectorPoly> cols;
  for (const auto& a : A) {
    require_same_ring(B.ring(), a.ring(), "modulo");
    cols.push_back(VectorPoly(B.ring(), {a}));
  }
  std::vector<VectorPoly> bgens;
  for (const auto& b : B.generators()) bgens.push_back(VectorPoly(B.ring(), {b}));
  return modulo(cols, Submodule(B.ring(), 1, std::move(bgens)));
}

/// Intersection of submodules of a common F_s by one elimination: each unit
/// vector e_k is tagged and copied into every summand.
inline Submodule module_intersect(const std::vector<Submodule>& mods) {
  if (mods.empty()) throw std::invalid_argument("module_intersect: empty list");
  if (mods.size() == 1) return mods.front();
  const RingPtr& ring = mods.front().ring();
  std::size_t s = mods.front().rank();
  std::size_t r = mods.size();
  for (const auto& m : mods) {
    require_same_ring(ring, m.ring(), "module_intersect");
    if (m.rank() != s) throw std::invalid_argument("module_intersect: rank mismatch");
  }
  engine::ModuleOrder plain(ring);
  std::vector<engine::ModPoly> sys;
  for (std::size_t k = 0; k < s; ++k) {
    engine::ModPoly v;
    for (std::size_t j = 0; j < r; ++j) v.push_back({Monomial(), std::uint32_t(j * s + k), Rational(1)});
    v.push_back({Monomial(), std::uint32_t(r * s + k), Rational(1)});
    engine::normalize(v, plain);
    sys.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < r; ++j)
    for (const auto& g : mods[j].generators())
      if (!g.is_zero()) sys.push_back(detail::to_mod(g, std::uint32_t(j * s), plain));
  std::vector<VectorPoly> out;
  for (const auto& e : engine::eliminate_components(sys, std::uint32_t(r * s), ring))
    out.push_back(detail::from_mod(e, ring, s));
  return Submodule(ring, s, std::move(out));
}

inline Submodule as_submodule(const Ideal& I) {
  std::vector<VectorPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(VectorPoly(I.ring(), {g}));
  return Submodule(I.ring(), 1, std::move(gens));
}

inline Ideal as_ideal(const Submodule& M) {
  if (M.rank() != 1) throw std::invalid_argument("as_ideal: rank must be 1");
  std::vector<Poly> gens;
  for (const auto& g : M.generators()) gens.push_back(g[0]);
  return Ideal(M.ring(), std::move(gens));
}

inline Ideal ideal_intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("ideal_intersect: empty list");
  std::vector<Submodule> mods;
  for (const auto& I : ideals) mods.push_back(as_submodule(I));
  return as_ideal(module_intersect(mods));
}

/// (A : b) = {h : h b in A}.
inline Ideal ideal_quotient(const Ideal& A, const Poly& b) {
  require_same_ring(A.ring(), b.ring(), "ideal_quotient");
  const RingPtr& ring = A.ring();
  if (b.is_zero()) return Ideal::unit(ring);
  std::vector<engine::ModPoly> sys;
  auto v = detail::to_mod(b, 0);
  v.push_back({Monomial(), 1, Rational(1)});
  sys.push_back(std::move(v));
  for (const auto& a : A.generators())
    if (!a.is_zero()) sys.push_back(detail::to_mod(a, 0));
  std::vector<Poly> out;
  for (const auto& e : engine::eliminate_components(sys, 1, ring)) out.push_back(detail::from_mod(e, ring));
  return Ideal(ring, std::move(out));
}

/// (A : B) = {h : h (b_1, ..., b_m) in A F_m}, a single modulo computation.
/// B = (0) gives the unit ideal.
inline Ideal ideal_quotient(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring(), "ideal_quotient");
  const RingPtr& ring = A.ring();
  std::vector<Poly> b;
  for (const auto& g : B.generators())
    if (!g.is_zero()) b.push_back(g);
  if (b.empty()) return Ideal::unit(ring);
  if (b.size() == 1) return ideal_quotient(A, b.front());
  std::size_t m = b.size();
  std::vector<VectorPoly> target;
  for (const auto& a : A.generators()) {
    if (a.is_zero()) continue;
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<Poly> e(m, Poly(ring));
      e[k] = a;
      target.push_back(VectorPoly(ring, std::move(e)));
    }
  }
  return as_ideal(modulo({VectorPoly(ring, std::move(b))}, Submodule(ring, m, std::move(target))));
}

}  // namespace tjurina
