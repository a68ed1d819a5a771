#pragma once

// Command-line front end. Every subcommand builds a JSON result from library
// calls; text mode renders the same JSON as "key: value" lines.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 a certificate failed to check.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tjurina.hpp"

namespace tjurina::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string task;
  std::vector<std::string> ring;
  std::string ideal;
  bool json = false;
  std::uint64_t seed = 0;
  int max_tries = 32;
  int coeff_bound = 5;
  bool no_witness = false;
  bool colon = false;
  std::optional<std::size_t> mixed_alphas;
  std::string factors;
  std::string script_task = "decide";
};

inline Json ring_and_ideal(const Ideal& I) {
  Json j;
  j["ring"] = I.ring()->names();
  j["ideal"] = polys_to_json(I.generators());
  return j;
}

inline std::size_t nonzero_count(const Ideal& I) {
  std::size_t n = 0;
  for (const auto& g : I.generators())
    if (!g.is_zero()) ++n;
  return n;
}

/// Runs one task. Usage problems throw UsageError, ParseError or
/// invalid_argument; failed certificates throw InconsistencyError.
inline Json run_task(const Request& req) {
  if (req.ring.empty()) throw UsageError("--ring is required");
  RingPtr ring = RingContext::local(req.ring);
  Ideal I(ring, parse_poly_list(req.ideal, ring));
  Json j = ring_and_ideal(I);
  const std::string& t = req.task;

  if (t == "std") {
    j["std"] = polys_to_json(I.standard_basis());
  } else if (t == "tjurina") {
    j["tjurina"] = polys_to_json(tjurina_of_ideal(I).generators());
  } else if (t == "delta") {
    j["delta"] = polys_to_json(antiderivatives(I).generators());
  } else if (t == "tfull") {
    TFullness tf = t_fullness(I);
    j["delta"] = polys_to_json(tf.delta.generators());
    j["t_delta"] = polys_to_json(tf.t_delta.generators());
    j["t_full"] = tf.full;
  } else if (t == "mingens") {
    GeneratorCount c = minimal_generator_count(I);
    j["minimal_generators"] = polys_to_json(c.unit ? std::vector<Poly>{Poly::constant(ring, 1)}
                                                   : minimal_generators(I).generators());
    j["count"] = c.count;
    j["unit_ideal"] = c.unit;
  } else if (t == "tdep") {
    std::size_t q = nonzero_count(I);
    if (req.mixed_alphas && *req.mixed_alphas != q)
      throw UsageError("--mixed-alphas " + std::to_string(*req.mixed_alphas) + " does not match the " +
                       std::to_string(q) + " nonzero generators");
    TDependence td = t_dependence(I, req.colon);
    j["t_dependent"] = td.dependent;
    j["certificates"] = {{"colon", colon_to_json(td)}};
  } else if (t == "decide" || t == "witness") {
    DecisionOptions opts;
    opts.find_witness = !req.no_witness || t == "witness";
    opts.colon_certificate = req.colon;
    opts.witness = {req.seed, req.max_tries, req.coeff_bound};
    DecisionReport r = is_tjurina_ideal(I, opts);
    verify_report(r);
    if (t == "decide") return report_to_json(r);
    j["verdict"] = r.verdict;
    j["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
    Json lambda = Json::array();
    for (const auto& l : r.lambda) lambda.push_back(l.get_str());
    j["lambda"] = lambda;
    j["tries"] = r.tries;
    if (r.witness) {
      j["tjurina_of_witness"] = polys_to_json(tjurina_of_poly(*r.witness).generators());
      j["check"] = "T(f) = I";
    } else {
      j["check"] = r.verdict ? "no witness within the tries" : "not a Tjurina ideal";
    }
  } else if (t == "principal") {
    std::vector<Poly> hints = parse_poly_list(req.factors, ring);
    PrincipalClassification pc = principal_ideal_classifier(I, hints);
    j["verdict"] = pc.verdict;
    j["t_full"] = pc.t_full;
    j["from_factors"] = pc.from_factors ? Json(*pc.from_factors) : Json(nullptr);
    j["reason"] = pc.reason;
  } else if (t == "script") {
    auto task = cas_task_from_string(req.script_task);
    if (!task) throw UsageError("unknown script task '" + req.script_task + "'");
    j["script"] = emit_cas_script(*task, ring, I.generators());
  } else {
    throw UsageError("unknown task '" + t + "'");
  }
  return j;
}

inline std::string render_value(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + render_value(v[k]);
    return s + ")";
  }
  return v.dump();
}

inline void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      out << indent << it.key() << ":\n";
      render_text(it.value(), out, indent + "  ");
    } else {
      out << indent << it.key() << ": " << render_value(it.value()) << "\n";
    }
  }
}

inline void print_result(const Request& req, const Json& j, std::ostream& out) {
  if (req.json) {
    out << j.dump() << "\n";
  } else if (req.task == "script") {
    out << j.at("script").get<std::string>();
  } else {
    render_text(j, out);
  }
}

/// Fields of one batch record override the command-line request.
inline Request request_from_record(const Json& rec, Request base) {
  if (!rec.is_object()) throw UsageError("batch record is not a JSON object");
  if (rec.contains("task")) base.task = rec["task"].get<std::string>();
  if (rec.contains("ring")) {
    const Json& r = rec["ring"];
    base.ring = r.is_array() ? r.get<std::vector<std::string>>() : parse_name_list(r.get<std::string>());
  }
  if (rec.contains("ideal")) {
    const Json& i = rec["ideal"];
    if (i.is_array()) {
      std::string s;
      for (std::size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + i[k].get<std::string>();
      base.ideal = s;
    } else {
      base.ideal = i.get<std::string>();
    }
  }
  if (rec.contains("no_witness")) base.no_witness = rec["no_witness"].get<bool>();
  if (rec.contains("colon")) base.colon = rec["colon"].get<bool>();
  if (rec.contains("seed")) base.seed = rec["seed"].get<std::uint64_t>();
  if (rec.contains("max_tries")) base.max_tries = rec["max_tries"].get<int>();
  if (rec.contains("coeff_bound")) base.coeff_bound = rec["coeff_bound"].get<int>();
  if (rec.contains("mixed_alphas")) base.mixed_alphas = rec["mixed_alphas"].get<std::size_t>();
  if (rec.contains("factors")) base.factors = rec["factors"].get<std::string>();
  if (rec.contains("script_task")) base.script_task = rec["script_task"].get<std::string>();
  base.json = true;
  return base;
}

/// Runs one request, reporting errors on err. Returns the exit code.
inline int run_guarded(const Request& req, std::ostream& out, std::ostream& err, Json* error_record = nullptr) {
  auto fail = [&](int code, const std::string& msg) {
    err << "error: " << msg << "\n";
    if (error_record) *error_record = {{"error", msg}, {"exit_code", code}};
    return code;
  };
  try {
    Json j = run_task(req);
    print_result(req, j, out);
    return 0;
  } catch (const InconsistencyError& e) {
    return fail(2, std::string("internal inconsistency: ") + e.what());
  } catch (const ParseError& e) {
    return fail(1, std::string("parse error: ") + e.what());
  } catch (const UsageError& e) {
    return fail(1, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(1, e.what());
  } catch (const Json::exception& e) {
    return fail(1, e.what());
  } catch (const std::exception& e) {
    return fail(2, e.what());
  }
}

inline int run_batch(const Request& base, const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << "\n";
    return 1;
  }
  int worst = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json error_record;
    int code;
    try {
      Request req = request_from_record(Json::parse(line), base);
      code = run_guarded(req, out, err, &error_record);
    } catch (const std::exception& e) {
      err << "error: line " << lineno << ": " << e.what() << "\n";
      error_record = {{"error", e.what()}, {"exit_code", 1}};
      code = 1;
    }
    if (code != 0) {
      error_record["line"] = lineno;
      out << error_record.dump() << "\n";
    }
    worst = std::max(worst, code);
  }
  return worst;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether an ideal of the local ring Q[x]_(x) is a Tjurina ideal T(f)."};
  app.require_subcommand(1);
  Request req;
  std::string ring_names, input;

  struct Subcommand {
    const char* name;
    const char* help;
  };
  const Subcommand subcommands[] = {
      {"decide", "full decision: Delta(I), T-fullness, T-dependence, witness"},
      {"delta", "antiderivative ideal Delta(I)"},
      {"tfull", "T-fullness test I = T(Delta(I))"},
      {"tdep", "T-dependence of the given generators"},
      {"tjurina", "T(J), the sum of T(g) over the generators"},
      {"std", "local standard basis"},
      {"mingens", "minimal generators"},
      {"witness", "search for f with T(f) = I"},
      {"principal", "classify a principal ideal, optionally with irreducible factors"},
      {"script", "emit a Singular script"},
  };
  for (const auto& s : subcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--ring", ring_names, "comma-separated local variables, e.g. \"x,y,z\"");
    sub->add_option("--ideal", req.ideal, "comma-separated generators");
    sub->add_option("--input", input, "batch file with one JSON record per line");
    sub->add_flag("--json", req.json, "print JSON");
    std::string name = s.name;
    if (name == "decide" || name == "witness") {
      sub->add_option("--seed", req.seed, "PRNG seed for the witness search");
      sub->add_option("--max-tries", req.max_tries, "witness attempts")->check(CLI::PositiveNumber);
      sub->add_option("--coeff-bound", req.coeff_bound, "lambda range -b..b")->check(CLI::PositiveNumber);
    }
    if (name == "decide") {
      sub->add_flag("--no-witness", req.no_witness, "decide T-dependence by the colon alone");
      sub->add_flag("--colon", req.colon, "always run the colon test and form the full colon");
    }
    if (name == "tdep") {
      sub->add_option_function<std::size_t>(
          "--mixed-alphas", [&req](std::size_t q) { req.mixed_alphas = q; },
          "expected number of alphas; must match the nonzero generators");
      sub->add_flag("--colon", req.colon, "also form the full colon, not only its quotients");
    }
    if (name == "principal") sub->add_option("--factors", req.factors, "irreducible factors of the generator");
    if (name == "script")
      sub->add_option("--task", req.script_task, "std, delta, tfull, tdep or decide")
          ->check(CLI::IsMember({"std", "delta", "tfull", "tdep", "decide"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  req.task = app.get_subcommands().front()->get_name();
  if (!ring_names.empty()) req.ring = parse_name_list(ring_names);

  if (!input.empty()) return run_batch(req, input, out, err);
  if (ring_names.empty()) {
    err << "error: --ring is required\n";
    return 1;
  }
  return run_guarded(req, out, err);
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"tjurina"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(int(argv.size()), argv.data(), out, err);
}

}  // namespace tjurina::cli
