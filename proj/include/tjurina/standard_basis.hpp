#pragma once

// Standard bases over the localization of Q[x] at a (block) monomial order.
//
// Elements of free modules are stored as sparse term lists (monomial,
// component, coefficient) sorted descending under a ModuleOrder. Ideals are
// rank-one modules. Reduction uses Mora's weak normal form with the ecart
// strategy, so one engine covers local, global and mixed block orders.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tjurina/poly.hpp"

namespace tjurina::engine {

struct ModTerm {
  Monomial mono;
  std::uint32_t comp;
  Rational coeff;
};

using ModPoly = std::vector<ModTerm>;

/// Term-over-position order on a free module. Components may be grouped into
/// weighted blocks; a heavier block beats any term of a lighter one, which is
/// what the elimination constructions rely on. Ties go to the lower index.
class ModuleOrder {
 public:
  explicit ModuleOrder(RingPtr ring, std::vector<int> comp_weights = {})
      : ring_(std::move(ring)), weights_(std::move(comp_weights)) {}

  const RingPtr& ring() const { return ring_; }

  int weight(std::uint32_t comp) const { return comp < weights_.size() ? weights_[comp] : 0; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    int wa = weight(ca), wb = weight(cb);
    if (wa != wb) return wa > wb ? 1 : -1;
    int c = ring_->compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

 private:
  RingPtr ring_;
  std::vector<int> weights_;
};

inline void normalize(ModPoly& p, const ModuleOrder& ord) {
  std::sort(p.begin(), p.end(), [&](const ModTerm& a, const ModTerm& b) { return ord.compare(a, b) > 0; });
  ModPoly out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size();) {
    ModTerm acc = std::move(p[i++]);
    while (i < p.size() && p[i].comp == acc.comp && p[i].mono == acc.mono) acc.coeff += p[i++].coeff;
    if (acc.coeff != 0) out.push_back(std::move(acc));
  }
  p = std::move(out);
}

inline int max_degree(const ModPoly& p) {
  int d = -1;
  for (const auto& t : p) d = std::max(d, t.mono.degree());
  return d;
}

/// deg(p) - deg(LM(p)).
inline int ecart(const ModPoly& p) { return p.empty() ? 0 : max_degree(p) - p.front().mono.degree(); }

/// h - c * m * g. Multiplying by a monomial preserves the term order, so this
/// is a linear merge.
inline ModPoly sub_scaled(const ModPoly& h, const Rational& c, const Monomial& m, const ModPoly& g,
                          const ModuleOrder& ord) {
  ModPoly out;
  out.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < h.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].mono * m;
      have_gm = true;
    }
    int cmp;
    if (i == h.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = ord.compare(h[i].mono, h[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, g[j].comp, -c * g[j].coeff});
      ++j;
      have_gm = false;
    } else {
      Rational s = h[i].coeff - c * g[j].coeff;
      if (s != 0) out.push_back({gm, g[j].comp, std::move(s)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

/// Sum of sorted term lists kept in buckets of geometrically growing size,
/// so repeatedly adding short multiples and taking off the leading term
/// does not copy the whole sum each time.
class Geobucket {
 public:
  Geobucket(const ModuleOrder& ord, ModPoly p) : ord_(&ord) { add(std::move(p)); }

  void add(ModPoly p) {
    while (!p.empty()) {
      std::size_t i = slot(p.size());
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      Bucket& b = buckets_[i];
      if (b.size() == 0) {
        b = {std::move(p), 0};
        return;
      }
      p = merge(b, std::move(p));
      b = {};
    }
  }

  /// Removes and returns the leading term of the sum, or nothing if it is 0.
  std::optional<ModTerm> pop_lead() {
    for (;;) {
      const ModTerm* lead = nullptr;
      for (const auto& b : buckets_)
        if (b.size() && (!lead || ord_->compare(b.front(), *lead) > 0)) lead = &b.front();
      if (!lead) return std::nullopt;
      ModTerm t{lead->mono, lead->comp, Rational(0)};
      for (auto& b : buckets_)
        if (b.size() && ord_->compare(b.front(), t) == 0) {
          t.coeff += b.front().coeff;
          ++b.start;
        }
      if (t.coeff != 0) return t;
    }
  }

  ModPoly take_all() {
    ModPoly out;
    for (auto& b : buckets_)
      if (b.size()) out = merge(b, std::move(out));
    buckets_.clear();
    return out;
  }

 private:
  struct Bucket {
    ModPoly p;
    std::size_t start = 0;
    std::size_t size() const { return p.size() - start; }
    const ModTerm& front() const { return p[start]; }
  };

  static std::size_t slot(std::size_t n) {
    std::size_t i = 0;
    for (std::size_t cap = 8; n > cap; cap *= 4) ++i;
    return i;
  }

  ModPoly merge(Bucket& a, ModPoly b) const {
    ModPoly out;
    out.reserve(a.size() + b.size());
    std::size_t i = a.start, j = 0;
    while (i < a.p.size() || j < b.size()) {
      int cmp = i == a.p.size() ? -1 : j == b.size() ? 1 : ord_->compare(a.p[i], b[j]);
      if (cmp > 0) {
        out.push_back(std::move(a.p[i++]));
      } else if (cmp < 0) {
        out.push_back(std::move(b[j++]));
      } else {
        a.p[i].coeff += b[j++].coeff;
        if (a.p[i].coeff != 0) out.push_back(std::move(a.p[i]));
        ++i;
      }
    }
    return out;
  }

  const ModuleOrder* ord_;
  std::vector<Bucket> buckets_;
};

inline void make_monic(ModPoly& p) {
  if (p.empty() || p.front().coeff == 1) return;
  Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

inline bool lead_divides(const ModTerm& g, const ModTerm& h) { return g.comp == h.comp && g.mono.divides(h.mono); }

inline std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m[i] != 0) mask |= std::uint32_t(1) << i;
  return mask;
}

/// Mora's weak normal form: returns r with u*f = sum q_i g_i + r for a unit
/// u of the localization, where r = 0 or LM(r) is divisible by no LM(g_i).
/// If G is a standard basis, r = 0 exactly when f lies in the module.
inline std::optional<ModPoly> bounded_normal_form(ModPoly h, const std::vector<ModPoly>& G, const ModuleOrder& ord,
                                                  std::size_t max_steps) {
  struct Reducer {
    const ModPoly* p;
    int ecart;
    std::uint32_t mask;
  };
  std::vector<Reducer> T;
  T.reserve(G.size() + 8);
  for (const auto& g : G)
    if (!g.empty()) T.push_back({&g, ecart(g), support_mask(g.front().mono)});
  std::deque<ModPoly> added;
  for (std::size_t step = 0; !h.empty(); ++step) {
    if (step == max_steps) return std::nullopt;
    const ModTerm& lead = h.front();
    std::uint32_t not_h = ~support_mask(lead.mono);
    std::size_t best = T.size();
    for (std::size_t k = 0; k < T.size(); ++k) {
      const auto& r = T[k];
      if ((r.mask & not_h) != 0 || !lead_divides(r.p->front(), lead)) continue;
      if (best == T.size() || r.ecart < T[best].ecart) {
        best = k;
        if (r.ecart == 0) break;
      }
    }
    if (best == T.size()) break;
    const ModPoly& g = *T[best].p;
    int g_ecart = T[best].ecart;
    int eh = ecart(h);
    Rational c = lead.coeff / g.front().coeff;
    Monomial m = lead.mono / g.front().mono;
    if (g_ecart > eh) {
      added.push_back(h);
      T.push_back({&added.back(), eh, support_mask(added.back().front().mono)});
    }
    h = sub_scaled(h, c, m, g, ord);
  }
  return h;
}

inline ModPoly mora_normal_form(ModPoly h, const std::vector<ModPoly>& G, const ModuleOrder& ord) {
  return *bounded_normal_form(std::move(h), G, ord, std::numeric_limits<std::size_t>::max());
}

/// True if every monomial of degree d in the first n variables is divisible
/// by one of `leads`.
inline bool covers_degree(const std::vector<Monomial>& leads, std::size_t n, int d) {
  Monomial m;
  auto rec = [&](auto&& self, std::size_t i, int left) -> bool {
    if (i + 1 == n) {
      m.set(i, Monomial::Exponent(left));
      for (const auto& l : leads)
        if (l.divides(m)) return true;
      return false;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, Monomial::Exponent(e));
      if (!self(self, i + 1, left - e)) return false;
    }
    m.set(i, 0);
    return true;
  };
  return n > 0 && rec(rec, 0, d);
}

/// Standard basis of the submodule generated by gens.
///
/// This is Buchberger's algorithm on the homogenization of the generators
/// with respect to a degree-first order, run without ever writing the
/// homogenizing variable t: each element carries its sugar s (the degree of
/// its homogenization), and g may reduce h only if t^(s_g - deg LM g) LM(g)
/// divides t^(s_h - deg LM h) LM(h). Reduction therefore never raises the
/// degree, and setting t = 1 in a Groebner basis of the homogenized module
/// gives a standard basis for the local or mixed order.
///
/// Pairs go by smallest sugar. Buchberger's chain criterion, applied to the
/// homogenized leading terms, is the only pair criterion. The result is
/// minimal with respect to leading terms and monic.
///
/// For ideals in a purely local ring, once the leading monomials contain
/// every monomial of some degree D, m^D lies in the ideal and all terms of
/// degree above D are dropped from then on (the highest corner cut).
inline std::vector<ModPoly> standard_basis(const std::vector<ModPoly>& gens, const ModuleOrder& ord) {
  std::vector<ModPoly> S;
  std::vector<int> t_exp;  // s - deg LM
  std::vector<std::uint32_t> masks;
  // A pair remembers the lcm of the homogenized leading terms t^e LM, split
  // into its t-exponent and its monomial.
  struct Pair {
    std::size_t i, j;
    int sugar;
    int t;
    Monomial lcm;
    std::uint32_t comp;
    bool alive;
  };
  std::vector<Pair> pairs;
  using QueueEntry = std::pair<int, std::size_t>;  // (sugar, pair index)
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
  std::vector<std::size_t> live;  // pair indices, possibly including processed ones
  auto hdivides = [](int ta, const Monomial& a, int tb, const Monomial& b) { return ta <= tb && a.divides(b); };

  const std::size_t nvars = ord.ring()->size();
  bool may_cut = ord.ring()->is_pure_local() && ord.weight(0) == 0 && nvars > 0;
  for (const auto& g : gens)
    for (const auto& t : g) may_cut = may_cut && t.comp == 0;
  const int no_corner = std::numeric_limits<int>::max() / 2;
  int corner = no_corner;  // m^(corner+1) is in the ideal
  std::vector<Monomial> leads;
  std::vector<int> pure(nvars, 0);
  // Single-term elements of the basis: every term they divide can be dropped.
  std::vector<ModTerm> killers;
  auto killed = [&](const ModTerm& t) {
    for (const auto& k : killers)
      if (lead_divides(k, t)) return true;
    return false;
  };
  auto cut = [&](ModPoly& h) {
    if (corner != no_corner) std::erase_if(h, [&](const ModTerm& t) { return t.mono.degree() > corner; });
    if (!killers.empty()) std::erase_if(h, killed);
  };
  auto update_corner = [&](const Monomial& lm) {
    leads.push_back(lm);
    std::size_t nz = 0, var = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (lm[i]) ++nz, var = i;
    if (nz == 1 && (pure[var] == 0 || lm[var] < pure[var])) pure[var] = lm[var];
    int hi = 1;
    for (int a : pure) {
      if (a == 0) return;
      hi += a - 1;
    }
    int d = std::min(hi, corner + 1);
    while (d > 1 && covers_degree(leads, nvars, d - 1)) --d;
    if (d == corner + 1) return;
    corner = d - 1;
    // Elements led above the corner are left alone; their leads are
    // multiples of lower ones and the final pass drops them.
    for (auto& g : S)
      if (g.front().mono.degree() <= corner)
        std::erase_if(g, [&](const ModTerm& t) { return t.mono.degree() > corner; });
  };

  // Top reduction only; tails are left as they are.
  auto reduce = [&](ModPoly h, int sugar) {
    Geobucket sum(ord, std::move(h));
    while (auto lead = sum.pop_lead()) {
      int th = sugar - lead->mono.degree();
      std::uint32_t not_h = ~support_mask(lead->mono);
      std::size_t best = S.size();
      for (std::size_t k = 0; k < S.size(); ++k) {
        if (t_exp[k] > th || (masks[k] & not_h) != 0 || !lead_divides(S[k].front(), *lead)) continue;
        if (best == S.size() || t_exp[k] < t_exp[best] || (t_exp[k] == t_exp[best] && S[k].size() < S[best].size()))
          best = k;
      }
      if (best == S.size()) {
        ModPoly rest = sum.take_all();
        ModPoly out;
        out.reserve(rest.size() + 1);
        out.push_back(std::move(*lead));
        for (auto& t : rest) out.push_back(std::move(t));
        return out;
      }
      const ModPoly& g = S[best];
      Rational c = lead->coeff / g.front().coeff;
      Monomial m = lead->mono / g.front().mono;
      ModPoly tail;
      tail.reserve(g.size() - 1);
      for (std::size_t j = 1; j < g.size(); ++j) tail.push_back({g[j].mono * m, g[j].comp, -c * g[j].coeff});
      cut(tail);
      sum.add(std::move(tail));
    }
    return ModPoly{};
  };

  // Gebauer-Moeller update: drop old pairs whose lcm the new lead divides
  // strictly (B), new pairs whose lcm is a proper multiple of another new
  // one (M), and all but one new pair per lcm (F).
  auto add_element = [&](ModPoly h, int sugar) {
    make_monic(h);
    std::size_t k = S.size();
    // A single term is its own homogenization, whatever sugar it came with.
    int th = h.size() == 1 ? 0 : sugar - h.front().mono.degree();
    const Monomial& lm = h.front().mono;
    std::uint32_t comp = h.front().comp;
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (S[i].front().comp != comp) continue;
      Monomial l = Monomial::lcm(S[i].front().mono, lm);
      int t = std::max(t_exp[i], th);
      fresh.push_back({i, k, l.degree() + t, t, l, comp, true});
    }
    auto same = [](int ta, const Monomial& a, int tb, const Monomial& b) { return ta == tb && a == b; };
    std::vector<std::size_t> still;
    for (std::size_t idx : live) {
      Pair& p = pairs[idx];
      if (!p.alive) continue;
      if (p.comp == comp && hdivides(th, lm, p.t, p.lcm)) {
        const Pair* pi = nullptr;
        const Pair* pj = nullptr;
        for (const auto& f : fresh) {
          if (f.i == p.i) pi = &f;
          if (f.i == p.j) pj = &f;
        }
        if (pi && pj && !same(pi->t, pi->lcm, p.t, p.lcm) && !same(pj->t, pj->lcm, p.t, p.lcm)) {
          p.alive = false;
          continue;
        }
      }
      still.push_back(idx);
    }
    live = std::move(still);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size() && fresh[a].alive; ++b) {
        if (a == b || !fresh[b].alive) continue;
        if (!hdivides(fresh[b].t, fresh[b].lcm, fresh[a].t, fresh[a].lcm)) continue;
        if (!same(fresh[b].t, fresh[b].lcm, fresh[a].t, fresh[a].lcm) || b < a) fresh[a].alive = false;
      }
    for (auto& f : fresh) {
      if (!f.alive) continue;
      live.push_back(pairs.size());
      queue.push({f.sugar, pairs.size()});
      pairs.push_back(std::move(f));
    }
    masks.push_back(support_mask(lm));
    Monomial lead = lm;
    if (h.size() == 1) {
      killers.push_back(h.front());
      for (auto& g : S) {
        auto dead = [&](const ModTerm& t) { return lead_divides(h.front(), t); };
        g.erase(std::remove_if(g.begin() + 1, g.end(), dead), g.end());
      }
    }
    S.push_back(std::move(h));
    t_exp.push_back(th);
    if (may_cut) update_corner(lead);
  };

  for (const auto& g : gens) {
    if (g.empty()) continue;
    int sugar = max_degree(g);
    ModPoly h = g;
    cut(h);
    if (h.empty()) continue;
    ModPoly r = reduce(std::move(h), sugar);
    if (!r.empty()) add_element(std::move(r), sugar);
  }

  while (!queue.empty()) {
    std::size_t idx = queue.top().second;
    queue.pop();
    if (!pairs[idx].alive) continue;
    pairs[idx].alive = false;
    Pair p = pairs[idx];
    const Monomial& l = p.lcm;
    if (l.degree() > corner) continue;

    const ModPoly& f = S[p.i];
    const ModPoly& g = S[p.j];
    // spoly = (l/LM f) f - (l/LM g) g, both monic.
    ModPoly sp = sub_scaled(ModPoly{}, Rational(-1), l / f.front().mono, f, ord);
    sp = sub_scaled(sp, Rational(1), l / g.front().mono, g, ord);
    cut(sp);
    ModPoly r = reduce(std::move(sp), p.sugar);
    if (!r.empty()) add_element(std::move(r), p.sugar);
  }

  // Drop elements whose leading term is divisible by another's.
  std::vector<bool> keep(S.size(), true);
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = 0; j < S.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (lead_divides(S[j].front(), S[i].front())) {
        bool equal_lead = S[j].front().mono == S[i].front().mono;
        if (!equal_lead || j < i) keep[i] = false;
      }
    }
  }
  std::vector<ModPoly> out;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (keep[i]) out.push_back(std::move(S[i]));
  return out;
}

/// Elimination of the first `upper` components: computes a standard basis
/// under an order where those components outweigh the rest and returns the
/// elements living entirely in the remaining components, shifted down by
/// `upper`. These generate the intersection of the submodule with
/// 0 (+) F_rest.
inline std::vector<ModPoly> eliminate_components(const std::vector<ModPoly>& gens, std::uint32_t upper,
                                                 const RingPtr& ring) {
  std::vector<int> weights(upper, 1);
  ModuleOrder ord(ring, std::move(weights));
  std::vector<ModPoly> sorted = gens;
  for (auto& g : sorted) normalize(g, ord);
  auto sb = standard_basis(sorted, ord);
  std::vector<ModPoly> out;
  for (auto& g : sb) {
    if (g.front().comp < upper) continue;
    for (auto& t : g) t.comp -= upper;
    out.push_back(std::move(g));
  }
  return out;
}

/// Membership of h in the module with standard basis G. A short Mora
/// reduction settles most cases; when it runs long (the reduction may have
/// to build an inverse unit term by term), h is a member iff adding it does
/// not enlarge the leading module.
inline bool module_contains(const ModPoly& h, const std::vector<ModPoly>& G, const ModuleOrder& ord) {
  if (h.empty()) return true;
  if (auto r = bounded_normal_form(h, G, ord, 200)) return r->empty();
  std::vector<ModPoly> gens = G;
  gens.push_back(h);
  for (const auto& g : standard_basis(gens, ord)) {
    bool covered = false;
    for (const auto& b : G)
      if (lead_divides(b.front(), g.front())) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace tjurina::engine
