#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/ring.hpp"

namespace tjurina {

using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coeff;
  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

/// Sorts descending under the ring order, merges equal monomials and drops
/// zero coefficients.
inline void normalize_terms(const RingContext& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i++]);
    while (i < terms.size() && terms[i].mono == acc.mono) acc.coeff += terms[i++].coeff;
    if (acc.coeff != 0) out.push_back(std::move(acc));
  }
  terms = std::move(out);
}

/// Polynomial over Q in a fixed ring context. Terms are kept in descending
/// order with no zero coefficients, so structural equality is equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly from_terms(RingPtr ring, std::vector<Term> terms) {
    normalize_terms(*ring, terms);
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static Poly constant(RingPtr ring, const Rational& c) {
    Poly p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Poly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1) {
    Poly p(std::move(ring));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  static Poly variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw std::out_of_range("variable index out of range");
    return monomial(std::move(ring), Monomial::variable(index));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }

  Rational constant_term() const {
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coeff;
    return 0;
  }

  /// Unit of the localization: the leading monomial is 1. In a pure local
  /// ring this is the same as a nonzero constant term.
  bool is_unit() const { return !terms_.empty() && terms_.front().mono.is_one(); }

  /// Largest total degree of a term, -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Poly operator+(const Poly& o) const { return combine(o, 1); }
  Poly operator-(const Poly& o) const { return combine(o, -1); }

  Poly operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_, "Poly::operator*");
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(ring_, std::move(prod));
  }

  Poly operator*(const Rational& c) const {
    if (c == 0) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned k) const {
    Poly r = constant(ring_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool operator==(const Poly& o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      if (c < 0) {
        os << '-';
        c = -c;
      } else if (!first) {
        os << '+';
      }
      first = false;
      bool one = t.mono.is_one();
      if (c != 1 || one) {
        os << c.get_str();
        if (!one) os << '*';
      }
      bool first_var = true;
      for (std::size_t i = 0; i < ring_->size(); ++i) {
        if (t.mono[i] == 0) continue;
        if (!first_var) os << '*';
        first_var = false;
        os << ring_->name(i);
        if (t.mono[i] > 1) os << '^' << t.mono[i];
      }
    }
    return os.str();
  }

 private:
  Poly combine(const Poly& o, int sign) const {
    require_same_ring(ring_, o.ring_, "Poly add/sub");
    const auto& ring = *ring_;
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i == terms_.size())
        c = -1;
      else if (j == o.terms_.size())
        c = 1;
      else
        c = ring.compare(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        Term t = o.terms_[j++];
        if (sign < 0) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        Rational s = sign > 0 ? Rational(terms_[i].coeff + o.terms_[j].coeff)
                              : Rational(terms_[i].coeff - o.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

inline Poly partial_derivative(const Poly& f, std::size_t var_index) {
  if (!f.ring() || var_index >= f.ring()->size()) throw std::out_of_range("partial_derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    auto e = t.mono[var_index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var_index, Monomial::Exponent(e - 1));
    out.push_back({m, t.coeff * e});
  }
  return Poly::from_terms(f.ring(), std::move(out));
}

/// Order of a germ: smallest total degree of a term; nullopt stands for +inf.
inline std::optional<int> ord_poly(const Poly& f) {
  if (!f.ring()->is_pure_local()) throw ContextMismatch("ord_poly: expects a pure local ring");
  if (f.is_zero()) return std::nullopt;
  int d = f.terms().front().mono.degree();
  for (const auto& t : f.terms()) d = std::min(d, t.mono.degree());
  return d;
}

/// Image under x -> 0 for every Local variable; the result lives in the same
/// ring and only involves the Global variables.
inline Poly substitute_locals_zero(const Poly& f) {
  const auto& ring = *f.ring();
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (ring.local_degree(t.mono) == 0) out.push_back(t);
  return Poly::from_terms(f.ring(), std::move(out));
}

/// True when every term has the same degree in the Global variables.
inline bool is_global_homogeneous(const Poly& f) {
  if (f.is_zero()) return true;
  const auto& ring = *f.ring();
  int d = ring.global_degree(f.terms().front().mono);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term& t) { return ring.global_degree(t.mono) == d; });
}

}  // namespace tjurina
