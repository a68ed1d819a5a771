#pragma once

// Deciding whether I = T(f) for some f, and finding such an f.
//
// I is a Tjurina ideal iff I is T-full and Delta(I) is T-dependent. When that
// holds, T(sum lambda_k g_k) = I for generators g_k of Delta(I) and generic
// constants lambda; the witness search samples small integer lambdas.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tjurina/t_dependence.hpp"

namespace tjurina {

struct GeneratorCount {
  std::size_t count = 0;
  bool unit = false;  // I = (1); count is reported as 1
};

/// dim I / mI, the minimal number of generators.
inline GeneratorCount minimal_generator_count(const Ideal& I) {
  if (!I.ring()->is_pure_local()) throw ContextMismatch("minimal_generator_count: expects a pure local ring");
  if (I.is_unit()) return {1, true};
  return {minimal_generators(I).size(), false};
}

struct WitnessOptions {
  std::uint64_t seed = 0;
  int max_tries = 32;
  int coeff_bound = 5;
};

struct WitnessSearch {
  std::optional<Poly> witness;
  std::vector<Rational> lambda;
  int tries = 0;
};

/// f = sum lambda_k g_k if T(f) = I, otherwise nothing.
inline std::optional<Poly> try_lambda(const Ideal& I, const std::vector<Poly>& gens,
                                      const std::vector<Rational>& lambda) {
  if (lambda.size() != gens.size()) throw std::invalid_argument("try_lambda: lambda has the wrong length");
  Poly f(I.ring());
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (lambda[k] != 0) f += gens[k] * lambda[k];
  if (ideal_equal_via(tjurina_of_poly(f), I)) return f;
  return std::nullopt;
}

/// Samples lambda in {-b..b}^q \ {0} from a PRNG seeded with opts.seed.
inline WitnessSearch search_witness(const Ideal& I, const std::vector<Poly>& delta_gens, const WitnessOptions& opts) {
  if (opts.max_tries < 1) throw std::invalid_argument("max_tries must be positive");
  if (opts.coeff_bound < 1) throw std::invalid_argument("coeff_bound must be positive");
  WitnessSearch out;
  if (delta_gens.empty()) return out;
  std::mt19937_64 rng(opts.seed);
  const std::uint64_t width = 2 * std::uint64_t(opts.coeff_bound) + 1;
  std::vector<Rational> lambda(delta_gens.size());
  while (out.tries < opts.max_tries) {
    bool nonzero = false;
    for (auto& l : lambda) {
      l = Rational(long(rng() % width) - opts.coeff_bound);
      nonzero = nonzero || l != 0;
    }
    if (!nonzero) continue;
    ++out.tries;
    if (auto f = try_lambda(I, delta_gens, lambda)) {
      out.witness = std::move(f);
      out.lambda = lambda;
      return out;
    }
  }
  return out;
}

struct DecisionOptions {
  bool find_witness = true;
  bool colon_certificate = false;  // compute the colon even when a witness settles the question
  WitnessOptions witness;
};

struct DecisionReport {
  Ideal ideal;
  Ideal delta;
  Ideal t_delta;
  bool t_full = false;
  std::optional<bool> t_dependent;  // empty when the decision did not need it
  std::string t_dependent_by;       // "colon", "witness", "trivial" or empty
  bool verdict = false;
  std::string reason;
  GeneratorCount generators;
  std::optional<TDependence> colon;
  std::optional<Poly> witness;
  std::vector<Rational> lambda;
  int tries = 0;
};

inline DecisionReport is_tjurina_ideal(const Ideal& I, const DecisionOptions& opts = {}) {
  const RingPtr& ring = I.ring();
  if (!ring->is_pure_local()) throw ContextMismatch("is_tjurina_ideal: expects a pure local ring");
  DecisionReport r;
  r.ideal = I;
  r.generators = minimal_generator_count(I);

  if (I.is_zero()) {
    r.delta = r.t_delta = Ideal::zero(ring);
    r.t_full = true;
    r.t_dependent = true;
    r.verdict = true;
    r.t_dependent_by = "trivial";
    r.reason = "zero ideal, T(0) = (0)";
    r.witness = Poly(ring);
    return r;
  }
  if (r.generators.unit) {
    r.delta = r.t_delta = Ideal::unit(ring);
    r.t_full = true;
    r.t_dependent = true;
    r.verdict = true;
    r.t_dependent_by = "trivial";
    r.reason = "unit ideal, T(x1) = (1)";
    r.witness = ring->size() > 0 ? Poly::variable(ring, 0) : Poly::constant(ring, 1);
    return r;
  }

  TFullness tf = t_fullness(I);
  r.delta = tf.delta;
  r.t_delta = tf.t_delta;
  r.t_full = tf.full;
  if (!r.t_full) {
    r.reason = "not T-full";
    return r;
  }
  if (r.generators.count > ring->size() + 1) {
    r.reason = "needs more than n+1 generators";
    return r;
  }
  // A witness f in Delta(I) with T(f) = I already shows that I is a Tjurina
  // ideal, hence that Delta(I) is T-dependent, so the colon is only needed
  // when the search comes back empty.
  if (opts.find_witness) {
    WitnessSearch ws = search_witness(I, r.delta.generators(), opts.witness);
    r.tries = ws.tries;
    if (ws.witness) {
      r.witness = std::move(ws.witness);
      r.lambda = std::move(ws.lambda);
      r.t_dependent = true;
      r.t_dependent_by = "witness";
      r.verdict = true;
      r.reason = "T-full and T(f) = I for a combination f of the generators of Delta(I)";
    }
  }
  if (!r.witness || opts.colon_certificate) {
    r.colon = t_dependence(r.delta, opts.colon_certificate);
    if (r.witness && !r.colon->dependent)
      throw InconsistencyError("a witness exists but Delta(I) is not T-dependent");
    if (!r.witness) {
      r.t_dependent = r.colon->dependent;
      r.t_dependent_by = "colon";
      r.verdict = *r.t_dependent;
      r.reason = r.verdict ? "T-full and Delta(I) is T-dependent" : "not T-dependent";
    }
  }
  return r;
}

/// Witness for I, or nothing if I is not a Tjurina ideal or the search ran
/// out of tries.
inline WitnessSearch find_witness(const Ideal& I, std::uint64_t seed = 0, int max_tries = 32, int coeff_bound = 5) {
  DecisionOptions opts;
  opts.witness = {seed, max_tries, coeff_bound};
  DecisionReport r = is_tjurina_ideal(I, opts);
  return {r.witness, r.lambda, r.tries};
}

/// Re-checks the invariants tying the report's fields together. Throws
/// InconsistencyError on the first violation.
inline void verify_report(const DecisionReport& r) {
  bool dep = r.t_dependent.value_or(false);
  if (r.verdict != (r.t_full && dep)) throw InconsistencyError("verdict differs from t_full and t_dependent");
  if (!ideal_contains(r.ideal, r.t_delta)) throw InconsistencyError("T(Delta(I)) is not contained in I");
  if (r.t_full && !ideal_contains(r.t_delta, r.ideal)) throw InconsistencyError("t_full set but I is not in T(Delta(I))");
  if (r.witness) {
    if (!ideal_equal_via(tjurina_of_poly(*r.witness), r.ideal)) throw InconsistencyError("T(witness) differs from I");
    if (!ideal_contains(r.delta, *r.witness)) throw InconsistencyError("witness is not in Delta(I)");
  }
}

struct PrincipalClassification {
  bool verdict = false;
  bool t_full = false;
  std::optional<bool> from_factors;  // closed form from the factor hints
  std::string reason;
};

/// (f) is Tjurina iff it is T-full. With the irreducible factors of f as
/// hints, also applies the closed forms: (p^k) with p irreducible is Tjurina
/// iff ord(p) = 1, and two or more distinct factors rule it out.
inline PrincipalClassification principal_ideal_classifier(const Ideal& I,
                                                          const std::vector<Poly>& factor_hints = {}) {
  const RingPtr& ring = I.ring();
  std::vector<Poly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) throw std::invalid_argument("principal_ideal_classifier: zero polynomial");
  Ideal In = minimal_generators(Ideal(ring, gens));
  if (In.size() != 1) throw std::invalid_argument("principal_ideal_classifier: ideal is not principal");
  const Poly& f = In.generators().front();

  PrincipalClassification out;
  out.t_full = is_T_full(In);
  out.verdict = out.t_full;
  out.reason = out.t_full ? "T-full" : "not T-full";
  if (factor_hints.empty()) return out;

  for (const auto& p : factor_hints) {
    require_same_ring(p.ring(), ring, "principal_ideal_classifier");
    if (p.is_zero() || p.is_unit()) throw std::invalid_argument("factor hint is zero or a unit");
    if (!ideal_contains(Ideal(ring, {p}), f)) throw std::invalid_argument("factor hint " + p.to_string() + " does not divide f");
  }
  if (factor_hints.size() >= 2) {
    out.from_factors = false;
    out.reason = "two or more distinct irreducible factors";
  } else {
    out.from_factors = ord_poly(factor_hints.front()) == 1;
    out.reason = *out.from_factors ? "power of a smooth irreducible germ" : "power of a singular irreducible germ";
  }
  if (*out.from_factors != out.t_full)
    throw InconsistencyError("factor closed form disagrees with the T-fullness test for " + f.to_string());
  return out;
}

}  // namespace tjurina
