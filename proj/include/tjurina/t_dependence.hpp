#pragma once

// T-dependence of an ideal J = (g_1, ..., g_q) of the local ring.
//
// Work in S = O[a_1, ..., a_q], graded by a-degree, with the section
// sigma = sum g_i a_i. J is T-dependent when the colon
//   (T(sigma) : T(J) S),   T(sigma) = (sigma, d sigma/dx_1, ..., d sigma/dx_n),
// is not contained in m S. In the ring S the alphas form a global degrevlex
// block in front of the local variables, so the localization of S at that
// order inverts exactly the units of O.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tjurina/tjurina_ops.hpp"

namespace tjurina {

/// The base ring O, the mixed ring S = O[alphas] and the maps between them.
class MixedRingBundle {
 public:
  MixedRingBundle(RingPtr base, std::size_t q) : base_(std::move(base)), q_(q) {
    if (!base_->is_pure_local()) throw ContextMismatch("MixedRingBundle: base ring must be pure local");
    std::vector<std::string> alphas;
    std::string stem = "a";
    auto clashes = [&](const std::string& s) {
      for (std::size_t i = 1; i <= q_; ++i)
        if (base_->index_of(s + std::to_string(i))) return true;
      return false;
    };
    while (clashes(stem)) stem += "_";
    for (std::size_t i = 1; i <= q_; ++i) alphas.push_back(stem + std::to_string(i));
    mixed_ = RingContext::mixed(alphas, base_->names());
  }

  const RingPtr& base() const { return base_; }
  const RingPtr& mixed() const { return mixed_; }
  std::size_t q() const { return q_; }

  std::size_t alpha_index(std::size_t i) const { return i; }
  std::size_t local_index(std::size_t j) const { return q_ + j; }

  Poly alpha(std::size_t i) const { return Poly::variable(mixed_, alpha_index(i)); }

  Poly lift(const Poly& f) const {
    require_same_ring(f.ring(), base_, "MixedRingBundle::lift");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m;
      for (std::size_t j = 0; j < base_->size(); ++j) m.set(local_index(j), t.mono[j]);
      terms.push_back({m, t.coeff});
    }
    return Poly::from_terms(mixed_, std::move(terms));
  }

  /// Inverse of lift on elements of alpha-degree 0.
  Poly project(const Poly& f) const {
    require_same_ring(f.ring(), mixed_, "MixedRingBundle::project");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      if (mixed_->global_degree(t.mono) != 0)
        throw std::invalid_argument("MixedRingBundle::project: element involves the alphas");
      Monomial m;
      for (std::size_t j = 0; j < base_->size(); ++j) m.set(j, t.mono[local_index(j)]);
      terms.push_back({m, t.coeff});
    }
    return Poly::from_terms(base_, std::move(terms));
  }

  Ideal lift(const Ideal& I) const {
    std::vector<Poly> gens;
    for (const auto& g : I.generators()) gens.push_back(lift(g));
    return Ideal(mixed_, std::move(gens));
  }

 private:
  RingPtr base_;
  std::size_t q_;
  RingPtr mixed_;
};

/// sigma = sum_i g_i a_i.
inline Poly build_sigma(const std::vector<Poly>& J_gens, const MixedRingBundle& bundle) {
  if (J_gens.empty()) throw std::invalid_argument("build_sigma: needs at least one generator");
  if (J_gens.size() != bundle.q()) throw std::invalid_argument("build_sigma: generator count differs from q");
  Poly sigma(bundle.mixed());
  for (std::size_t i = 0; i < J_gens.size(); ++i) sigma += bundle.lift(J_gens[i]) * bundle.alpha(i);
  return sigma;
}

/// (sigma, d sigma/dx_1, ..., d sigma/dx_n); no derivatives in the alphas.
inline Ideal tjurina_sheaf_ideal(const Poly& sigma, const MixedRingBundle& bundle) {
  require_same_ring(sigma.ring(), bundle.mixed(), "tjurina_sheaf_ideal");
  std::vector<Poly> gens{sigma};
  for (std::size_t j = 0; j < bundle.base()->size(); ++j) {
    Poly d = partial_derivative(sigma, bundle.local_index(j));
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  return Ideal(bundle.mixed(), std::move(gens));
}

/// A certificate did not check out. Never expected; signals a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TDependence {
  bool dependent = false;
  bool trivial = false;      // J = (0): decided without building S
  std::vector<std::string> mixed_ring;  // variable names of S, alphas first
  Poly sigma;
  Ideal sheaf_ideal;         // T(sigma)
  std::vector<Poly> tj_generators;  // minimal generators b_k of T(J), lifted to S
  Ideal target;              // T(sigma) + m T(J) S, plus m^truncation S when set
  std::optional<int> truncation;
  std::vector<Ideal> quotients;     // (target : b_k), one per b_k
  // Dependent: a product of one element per quotient, so it lies in
  // (target : T(J) S), with nonzero image under x -> 0.
  Poly certificate;
  Poly certificate_at_origin;
  // Not dependent: a quotient inside m S.
  std::optional<std::size_t> blocking;
  std::optional<Ideal> colon;        // (T(sigma) : T(J) S) as a standard basis, when asked for
  std::vector<Poly> colon_at_origin; // images of its generators under x -> 0
};

/// Minimal generators of T(J) in O: monomials when T(J) is a monomial ideal.
inline std::vector<Poly> tjurina_generators(const Ideal& tj) {
  const RingPtr& ring = tj.ring();
  std::vector<Monomial> leads;
  for (const auto& g : tj.standard_basis()) leads.push_back(g.leading_term().mono);
  bool monomial = std::all_of(leads.begin(), leads.end(),
                              [&](const Monomial& m) { return ideal_contains(tj, Poly::monomial(ring, m)); });
  if (!monomial) return minimal_generators(tj).generators();
  std::vector<Poly> out;
  for (std::size_t i = 0; i < leads.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < leads.size() && minimal; ++j)
      if (j != i && leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i)) minimal = false;
    if (minimal) out.push_back(Poly::monomial(ring, leads[i]));
  }
  return out;
}

/// Decides T-dependence of J on the generators it is given.
///
/// m S is prime (S / m S is a polynomial ring), and the colon is the
/// intersection of the quotients (T(sigma) : b_k), so the colon avoids m S
/// exactly when each quotient does, that is, when T(J) S and T(sigma) agree
/// after localizing at m S. By Nakayama they agree there as soon as T(J) S
/// lies in T(sigma) + m T(J) S, so the quotients are taken of that ideal. If
/// m^c lies in T(J), m^(c+1) S lies in it too and is added explicitly. The
/// added terms bound what the standard bases have to carry.
///
/// With `full_colon` the colon itself is formed as well and must agree.
inline TDependence t_dependence(const Ideal& J, bool full_colon = false) {
  const RingPtr& base = J.ring();
  if (!base->is_pure_local()) throw ContextMismatch("is_T_dependent: expects a pure local ring");
  TDependence r;
  std::vector<Poly> gens;
  for (const auto& g : J.generators())
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) {
    r.dependent = true;
    r.trivial = true;
    return r;
  }
  MixedRingBundle bundle(base, gens.size());
  const RingPtr& S = bundle.mixed();
  r.mixed_ring = S->names();
  r.sigma = build_sigma(gens, bundle);
  r.sheaf_ideal = tjurina_sheaf_ideal(r.sigma, bundle);
  Ideal tj_base = tjurina_of_ideal(Ideal(base, gens));
  Ideal b(base, tjurina_generators(tj_base));
  r.tj_generators = bundle.lift(b).generators();
  Ideal m = maximal_ideal(base);
  r.target = ideal_sum(r.sheaf_ideal, bundle.lift(ideal_product(m, b)));
  bool monomial = std::all_of(b.generators().begin(), b.generators().end(), [](const Poly& g) { return g.size() == 1; });
  if (auto c = primary_exponent(tj_base); c && !monomial) {
    r.truncation = *c + 1;
    r.target = ideal_sum(r.target, bundle.lift(ideal_power(m, unsigned(*c + 1))));
  }
  r.dependent = true;
  r.certificate = Poly::constant(S, Rational(1));
  for (std::size_t k = 0; k < r.tj_generators.size(); ++k) {
    Ideal q = ideal_quotient(r.target, r.tj_generators[k]);
    std::optional<Poly> avoiding;
    for (const auto& h : q.generators())
      if (!substitute_locals_zero(h).is_zero()) {
        avoiding = h;
        break;
      }
    r.quotients.push_back(std::move(q));
    if (!avoiding) {
      r.dependent = false;
      r.blocking = k;
      r.certificate = Poly(S);
      break;
    }
    r.certificate *= *avoiding;
  }
  r.certificate_at_origin = substitute_locals_zero(r.certificate);
  if (full_colon) {
    Ideal colon = ideal_quotient(r.sheaf_ideal, Ideal(S, r.tj_generators));
    r.colon = Ideal(S, colon.standard_basis());
    bool avoids = false;
    for (const auto& c : r.colon->generators()) {
      Poly img = substitute_locals_zero(c);
      if (!img.is_zero()) avoids = true;
      r.colon_at_origin.push_back(std::move(img));
    }
    if (avoids != r.dependent) throw InconsistencyError("the colon and its quotients disagree about m S");
  }
  return r;
}

inline bool is_T_dependent(const Ideal& J) { return t_dependence(J).dependent; }

}  // namespace tjurina
