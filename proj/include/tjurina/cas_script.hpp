#pragma once

// Singular scripts that redo a computation, for cross-checking by hand or
// from a harness. Polynomials use Singular's short notation (2xy2) when
// every variable name is a single letter, and explicit * and ^ otherwise.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tjurina/t_dependence.hpp"

namespace tjurina {

enum class CasTask { Std, Delta, TFull, TDep, Decide };

inline std::optional<CasTask> cas_task_from_string(const std::string& s) {
  if (s == "std") return CasTask::Std;
  if (s == "delta") return CasTask::Delta;
  if (s == "tfull") return CasTask::TFull;
  if (s == "tdep") return CasTask::TDep;
  if (s == "decide") return CasTask::Decide;
  return std::nullopt;
}

namespace detail {

inline bool short_names(const RingContext& ring) {
  for (const auto& v : ring.vars())
    if (v.name.size() != 1) return false;
  return true;
}

inline std::string singular_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  const RingContext& ring = *p.ring();
  bool brief = short_names(ring);
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (c < 0) {
      s += "-";
      c = -c;
    } else if (!first) {
      s += "+";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      auto e = t.mono[i];
      if (e == 0) continue;
      if (brief) {
        mono += ring.name(i);
        if (e > 1) mono += std::to_string(e);
      } else {
        if (!mono.empty()) mono += "*";
        mono += ring.name(i);
        if (e > 1) mono += "^" + std::to_string(e);
      }
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c != 1) {
      s += c.get_str();
      s += brief && c.get_den() == 1 ? "" : "*";
      s += mono;
    } else {
      s += mono;
    }
  }
  return s;
}

inline std::string singular_list(const std::vector<Poly>& ps) {
  if (ps.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k) s += ",";
    s += singular_poly(ps[k]);
  }
  return s;
}

inline std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < names.size(); ++k) s += (k ? "," : "") + names[k];
  return s;
}

inline void emit_delta(std::ostringstream& out, const RingPtr& ring, const std::vector<Poly>& gens) {
  std::size_t s = gens.size();
  out << "ideal B=" << singular_list(gens) << ";\n";
  for (std::size_t j = 0; j < ring->size(); ++j) {
    std::vector<Poly> col;
    for (const auto& g : gens) col.push_back(partial_derivative(g, j));
    out << "matrix A" << j + 1 << "[1][" << s << "]=" << singular_list(col) << ";\n";
  }
  for (std::size_t j = 0; j < ring->size(); ++j)
    out << "module m" << j + 1 << "=modulo(A" << j + 1 << ",B);\n";
  out << "module m=intersect(";
  for (std::size_t j = 0; j < ring->size(); ++j) out << (j ? "," : "") << "m" << j + 1;
  out << ");\n";
  out << "def M=std(m);\n";
  out << "print(M);\n";
  out << "matrix F[1][" << s << "]=B;\n";
  out << "ideal D=ideal(F*matrix(M));\n";
  out << "D=std(D);\n";
  out << "D;\n";
}

inline void emit_tfull(std::ostringstream& out, const RingPtr& ring) {
  out << "ideal TD=D;\n";
  out << "int i;\n";
  out << "for(i=1;i<=ncols(D);i++){TD=TD,";
  for (std::size_t j = 0; j < ring->size(); ++j) out << (j ? "," : "") << "diff(D[i]," << ring->name(j) << ")";
  out << ";}\n";
  out << "// T-full iff this prints 0\n";
  out << "size(reduce(B,std(TD)));\n";
}

inline void emit_tdep(std::ostringstream& out, const RingPtr& base, const std::vector<Poly>& J, bool from_base) {
  std::vector<Poly> gens;
  for (const auto& g : J)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) {
    out << "// J = (0) is T-dependent\n";
    return;
  }
  MixedRingBundle bundle(base, gens.size());
  std::size_t q = gens.size(), n = base->size();
  out << "ring S=0,(" << join_names(bundle.mixed()->names()) << "),(dp(" << q << "),ds(" << n << "));\n";
  if (from_base) {
    out << "ideal J=imap(r,J0);\n";
  } else {
    std::vector<Poly> lifted;
    for (const auto& g : gens) lifted.push_back(bundle.lift(g));
    out << "ideal J=" << singular_list(lifted) << ";\n";
  }
  out << "poly sigma=";
  for (std::size_t i = 0; i < q; ++i) out << (i ? "+" : "") << bundle.mixed()->name(i) << "*J[" << i + 1 << "]";
  out << ";\n";
  out << "ideal Ts=sigma";
  for (std::size_t j = 0; j < n; ++j) out << ",diff(sigma," << base->name(j) << ")";
  out << ";\n";
  out << "ideal TJ=J";
  for (std::size_t j = 0; j < n; ++j) out << ",diff(J," << base->name(j) << ")";
  out << ";\n";
  out << "ideal C=std(quotient(Ts,TJ));\n";
  out << "print(C);\n";
  out << "ideal C0=C;\n";
  for (std::size_t j = 0; j < n; ++j) out << "C0=subst(C0," << base->name(j) << ",0);\n";
  out << "// T-dependent iff C0 is not zero\n";
  out << "C0;\n";
}

}  // namespace detail

/// Script for the given task on the ideal generated by `gens` in the pure
/// local ring `ring`.
inline std::string emit_cas_script(CasTask task, const RingPtr& ring, const std::vector<Poly>& gens) {
  if (!ring->is_pure_local()) throw ContextMismatch("emit_cas_script: expects a pure local ring");
  for (const auto& g : gens) require_same_ring(g.ring(), ring, "emit_cas_script");
  std::vector<Poly> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);

  std::ostringstream out;
  if (task == CasTask::TDep) {
    detail::emit_tdep(out, ring, nonzero, false);
    return out.str();
  }
  out << "ring r=0,(" << detail::join_names(ring->names()) << "),ds;\n";
  switch (task) {
    case CasTask::Std:
      out << "ideal I=" << detail::singular_list(nonzero) << ";\n";
      out << "print(std(I));\n";
      break;
    case CasTask::Delta:
      if (nonzero.empty()) {
        out << "ideal D=0;\nprint(std(D));\n";
        break;
      }
      detail::emit_delta(out, ring, nonzero);
      break;
    case CasTask::TFull:
    case CasTask::Decide:
      if (nonzero.empty()) {
        out << "ideal D=0;\nprint(std(D));\n";
        break;
      }
      detail::emit_delta(out, ring, nonzero);
      detail::emit_tfull(out, ring);
      if (task == CasTask::Decide) {
        out << "ideal J0=minbase(D);\n";
        detail::emit_tdep(out, ring, antiderivatives(Ideal(ring, nonzero)).generators(), true);
      }
      break;
    case CasTask::TDep:
      break;
  }
  return out.str();
}

}  // namespace tjurina
