#pragma once

// JSON form of a DecisionReport. Polynomials are written in canonical
// descending-order form and rationals as "p/q" strings, so reading a report
// back gives the same generator lists term for term.

#include <string>
#include <vector>

#include "json.hpp"
#include "tjurina/decision.hpp"
#include "tjurina/parse.hpp"

namespace tjurina {

using Json = nlohmann::ordered_json;

inline Json polys_to_json(const std::vector<Poly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

inline std::vector<Poly> polys_from_json(const Json& j, const RingPtr& ring) {
  std::vector<Poly> out;
  for (const auto& s : j) out.push_back(parse_poly(s.get<std::string>(), ring));
  return out;
}

inline Json colon_to_json(const TDependence& t) {
  Json c;
  c["dependent"] = t.dependent;
  c["trivial"] = t.trivial;
  c["mixed_ring"] = t.mixed_ring;
  if (t.trivial) {
    c["sigma"] = nullptr;
    return c;
  }
  c["sigma"] = t.sigma.to_string();
  c["sheaf_ideal"] = polys_to_json(t.sheaf_ideal.generators());
  c["tj_generators"] = polys_to_json(t.tj_generators);
  c["truncation"] = t.truncation ? Json(*t.truncation) : Json(nullptr);
  Json qs = Json::array();
  for (const auto& q : t.quotients) qs.push_back(polys_to_json(q.generators()));
  c["quotients"] = qs;
  c["certificate"] = t.certificate.to_string();
  c["certificate_at_origin"] = t.certificate_at_origin.to_string();
  c["blocking"] = t.blocking ? Json(*t.blocking) : Json(nullptr);
  c["generators"] = t.colon ? polys_to_json(t.colon->generators()) : Json(nullptr);
  c["at_origin"] = polys_to_json(t.colon_at_origin);
  return c;
}

/// `base` is the pure local ring; the mixed ring is rebuilt from the names.
inline TDependence colon_from_json(const Json& c, const RingPtr& base) {
  TDependence t;
  t.dependent = c.at("dependent").get<bool>();
  t.trivial = c.at("trivial").get<bool>();
  t.mixed_ring = c.at("mixed_ring").get<std::vector<std::string>>();
  if (t.trivial) return t;
  std::size_t n = base->size();
  if (t.mixed_ring.size() < n) throw std::invalid_argument("colon certificate: mixed ring is too small");
  std::vector<std::string> alphas(t.mixed_ring.begin(), t.mixed_ring.end() - std::ptrdiff_t(n));
  std::vector<std::string> locals(t.mixed_ring.end() - std::ptrdiff_t(n), t.mixed_ring.end());
  if (locals != base->names()) throw std::invalid_argument("colon certificate: local variables differ from the ring");
  RingPtr S = RingContext::mixed(alphas, locals);
  t.sigma = parse_poly(c.at("sigma").get<std::string>(), S);
  t.sheaf_ideal = Ideal(S, polys_from_json(c.at("sheaf_ideal"), S));
  t.tj_generators = polys_from_json(c.at("tj_generators"), S);
  if (!c.at("truncation").is_null()) t.truncation = c.at("truncation").get<int>();
  for (const auto& q : c.at("quotients")) t.quotients.push_back(Ideal(S, polys_from_json(q, S)));
  t.certificate = parse_poly(c.at("certificate").get<std::string>(), S);
  t.certificate_at_origin = parse_poly(c.at("certificate_at_origin").get<std::string>(), S);
  if (!c.at("blocking").is_null()) t.blocking = c.at("blocking").get<std::size_t>();
  if (!c.at("generators").is_null()) t.colon = Ideal(S, polys_from_json(c.at("generators"), S));
  t.colon_at_origin = polys_from_json(c.at("at_origin"), S);
  return t;
}

inline Json report_to_json(const DecisionReport& r) {
  Json j;
  j["ring"] = r.ideal.ring()->names();
  j["ideal"] = polys_to_json(r.ideal.generators());
  j["delta"] = polys_to_json(r.delta.generators());
  j["t_full"] = r.t_full;
  j["t_dependent"] = r.t_dependent ? Json(*r.t_dependent) : Json(nullptr);
  j["verdict"] = r.verdict;
  j["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
  Json lambda = Json::array();
  for (const auto& l : r.lambda) lambda.push_back(l.get_str());
  j["lambda"] = lambda;
  Json c;
  c["t_delta"] = polys_to_json(r.t_delta.generators());
  c["reason"] = r.reason;
  c["t_dependent_by"] = r.t_dependent_by;
  c["generator_count"] = r.generators.count;
  c["unit_ideal"] = r.generators.unit;
  c["tries"] = r.tries;
  c["colon"] = r.colon ? colon_to_json(*r.colon) : Json(nullptr);
  j["certificates"] = c;
  return j;
}

inline DecisionReport report_from_json(const Json& j) {
  RingPtr ring = RingContext::local(j.at("ring").get<std::vector<std::string>>());
  DecisionReport r;
  r.ideal = Ideal(ring, polys_from_json(j.at("ideal"), ring));
  r.delta = Ideal(ring, polys_from_json(j.at("delta"), ring));
  r.t_full = j.at("t_full").get<bool>();
  if (!j.at("t_dependent").is_null()) r.t_dependent = j.at("t_dependent").get<bool>();
  r.verdict = j.at("verdict").get<bool>();
  if (!j.at("witness").is_null()) r.witness = parse_poly(j.at("witness").get<std::string>(), ring);
  for (const auto& l : j.at("lambda")) {
    Rational q(l.get<std::string>());
    q.canonicalize();
    r.lambda.push_back(q);
  }
  const Json& c = j.at("certificates");
  r.t_delta = Ideal(ring, polys_from_json(c.at("t_delta"), ring));
  r.reason = c.at("reason").get<std::string>();
  r.t_dependent_by = c.at("t_dependent_by").get<std::string>();
  r.generators.count = c.at("generator_count").get<std::size_t>();
  r.generators.unit = c.at("unit_ideal").get<bool>();
  r.tries = c.at("tries").get<int>();
  if (!c.at("colon").is_null()) r.colon = colon_from_json(c.at("colon"), ring);
  return r;
}

/// Field-by-field equality; generator lists must agree term for term.
inline bool reports_equal(const DecisionReport& a, const DecisionReport& b) {
  auto same_gens = [](const Ideal& x, const Ideal& y) {
    return same_ring(x.ring(), y.ring()) && x.generators() == y.generators();
  };
  auto same_colon = [&](const TDependence& x, const TDependence& y) {
    if (x.dependent != y.dependent || x.trivial != y.trivial || x.mixed_ring != y.mixed_ring) return false;
    if (x.trivial) return true;
    if (x.quotients.size() != y.quotients.size() || x.colon.has_value() != y.colon.has_value()) return false;
    for (std::size_t k = 0; k < x.quotients.size(); ++k)
      if (!same_gens(x.quotients[k], y.quotients[k])) return false;
    if (x.colon && !same_gens(*x.colon, *y.colon)) return false;
    return x.sigma == y.sigma && same_gens(x.sheaf_ideal, y.sheaf_ideal) && x.tj_generators == y.tj_generators && x.truncation == y.truncation &&
           x.certificate == y.certificate && x.certificate_at_origin == y.certificate_at_origin &&
           x.blocking == y.blocking && x.colon_at_origin == y.colon_at_origin;
  };
  if (!same_gens(a.ideal, b.ideal) || !same_gens(a.delta, b.delta) || !same_gens(a.t_delta, b.t_delta)) return false;
  if (a.t_full != b.t_full || a.t_dependent != b.t_dependent || a.verdict != b.verdict) return false;
  if (a.reason != b.reason || a.t_dependent_by != b.t_dependent_by || a.generators.count != b.generators.count || a.generators.unit != b.generators.unit)
    return false;
  if (a.witness != b.witness || a.lambda != b.lambda || a.tries != b.tries) return false;
  if (a.colon.has_value() != b.colon.has_value()) return false;
  return !a.colon || same_colon(*a.colon, *b.colon);
}

}  // namespace tjurina
