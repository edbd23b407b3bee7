#include "sasano_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sasano/errors.hpp"

namespace sasano::cli {

namespace {

// Numeric agreement required by `verify`.
constexpr double kNumericThreshold = 1e-6;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

json load_json_argument(const std::string& value) {
  auto first = value.find_first_not_of(" \t\n");
  if (first != std::string::npos && value[first] == '{') {
    try {
      return json::parse(value);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad inline JSON: ") + e.what());
    }
  }
  std::ifstream in(value);
  if (!in) throw ParseError("cannot open '" + value + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("bad JSON in '" + value + "': " + e.what());
  }
}

Solution require_solution(const Request& r) {
  if (!r.solution) throw ParseError(r.command + " needs --solution");
  return solution_from_json(*r.solution);
}

json transform_body(const WordImage& img) {
  json j{{"params", to_json(img.params)}};
  if (img.solution) {
    j["solution"] = to_json(*img.solution);
    j["chart"] = to_string(img.solution->chart);
  }
  return j;
}

json expand_body(const Solution& sol, const ExpansionPoint& pt, std::optional<long> order) {
  static const char* names[] = {"x", "y", "z", "w"};
  json j{{"chart", to_string(sol.chart)}, {"point", pt.str()}};
  json comps = json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& f = sol.u[i];
    long n;
    if (order) {
      n = *order;
    } else {
      // eight terms past the leading one in the local parameter
      auto lead = leading_exponent(f, pt);
      long val = lead ? (pt.kind == ExpansionPoint::Kind::Infinity ? -*lead : *lead) : 0;
      n = val + 8;
    }
    comps[names[i]] = to_json(laurent_expand(f, pt, n));
  }
  j["series"] = comps;
  return j;
}

Response verify_body(const Params& p, const Solution& sol, bool numeric) {
  Response out;
  json checks = json::array();
  bool ok = verify_solution(p, sol);
  checks.push_back(json{{"name", "residual"}, {"status", ok ? "PASS" : "FAIL"}});
  if (numeric) {
    auto [t0, t1] = pole_free_interval(sol);
    double dev = numeric_crosscheck(p, sol, t0, t1, 20);
    bool nok = dev <= kNumericThreshold;
    checks.push_back(json{{"name", "numeric"},
                          {"status", nok ? "PASS" : "FAIL"},
                          {"interval", json::array({t0.str(), t1.str()})},
                          {"max_deviation", dev}});
    ok = ok && nok;
  }
  out.body = json{{"verified", ok}, {"checks", checks}};
  out.code = ok ? Ok : VerificationFailed;
  return out;
}

Response error_response(int code, const std::string& kind, const std::string& msg) {
  return {code, json{{"error", msg}, {"kind", kind}}};
}

}  // namespace

Params parse_alphas(System s, const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 5) throw ParseError("--alphas needs five comma-separated values");
  std::array<Rational, 5> a;
  for (std::size_t i = 0; i < 4; ++i) a[i] = Rational::parse(parts[i]);
  auto last = parts[4];
  last.erase(std::remove_if(last.begin(), last.end(), ::isspace), last.end());
  if (last == "auto") return Params::solve_last(s, {a[0], a[1], a[2], a[3]});
  a[4] = Rational::parse(parts[4]);
  Params p{s, a};
  if (!p.valid()) {
    throw ParseError("alphas violate the " + to_string(s) + " normalization constraint (defect " +
                     p.constraint_defect().str() + ")");
  }
  return p;
}

Request request_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("batch line must be a JSON object");
  Request r;
  auto str = [&](const char* key) -> std::string {
    if (!j.contains(key)) throw ParseError(std::string("missing '") + key + "'");
    return j.at(key).get<std::string>();
  };
  r.command = str("command");
  r.system = str("system");
  const json& a = j.at("alphas");
  if (a.is_array()) {
    std::string joined;
    for (const auto& v : a) {
      if (!joined.empty()) joined += ",";
      joined += v.is_string() ? v.get<std::string>() : v.dump();
    }
    r.alphas = joined;
  } else {
    r.alphas = a.get<std::string>();
  }
  if (j.contains("word")) {
    const json& w = j.at("word");
    r.word = w.is_string() ? w.get<std::string>() : word_from_json(w).str();
  }
  if (j.contains("solution")) r.solution = j.at("solution");
  if (j.contains("at")) r.at = j.at("at").get<std::string>();
  if (j.contains("order")) r.order = j.at("order").get<long>();
  if (j.contains("numeric")) r.numeric = j.at("numeric").get<bool>();
  return r;
}

Response execute(const Request& r) {
  try {
    if (r.command == "expand") {
      auto pt = ExpansionPoint::parse(r.at);
      return {Ok, expand_body(require_solution(r), pt, r.order)};
    }
    System s = parse_system(r.system);
    Params p = parse_alphas(s, r.alphas);
    if (r.command == "classify") {
      auto c = classify(p);
      json j{{"verdict", c.verdict == Verdict::Exists ? "exists" : "not_exists"}};
      if (c.condition) j["condition"] = *c.condition;
      return {Ok, j};
    }
    if (r.command == "construct") {
      auto c = construct_rational_solution(p);
      return {Ok, to_json(c)};
    }
    if (r.command == "verify") return verify_body(p, require_solution(r), r.numeric);
    if (r.command == "transform") {
      if (!r.word) throw ParseError("transform needs --word");
      std::optional<Solution> sol;
      if (r.solution) sol = solution_from_json(*r.solution);
      return {Ok, transform_body(act_word(Word::parse(*r.word), p, sol))};
    }
    if (r.command == "report") {
      Solution sol;
      if (r.solution) {
        sol = solution_from_json(*r.solution);
      } else {
        auto c = construct_rational_solution(p);
        if (!c.solution) return error_response(VerificationFailed, "not_exists", "no rational solution");
        sol = *c.solution;
      }
      return {Ok, to_json(invariant_report(p, sol))};
    }
    return error_response(UsageError, "usage", "unknown command '" + r.command + "'");
  } catch (const UndefinedAction& e) {
    return error_response(ActionFailed, "undefined_action", e.what());
  } catch (const NormalizationFailed& e) {
    return error_response(ActionFailed, "normalization_failed", e.what());
  } catch (const PoleOnPath& e) {
    return error_response(VerificationFailed, "pole_on_path", e.what());
  } catch (const Error& e) {
    return error_response(UsageError, "parse", e.what());
  } catch (const json::exception& e) {
    return error_response(UsageError, "parse", e.what());
  }
}

namespace {

int run_batch(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) {
    out << error_response(UsageError, "parse", "cannot open '" + path + "'").body.dump() << "\n";
    return UsageError;
  }
  int worst = Ok;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Response resp;
    try {
      Request r = request_from_json(json::parse(line));
      resp = execute(r);
    } catch (const std::exception& e) {
      resp = error_response(UsageError, "parse", e.what());
    }
    out << resp.body.dump() << "\n";
    worst = std::max(worst, resp.code);
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational solutions of the B4, D4 and D5 Sasano systems"};
  app.require_subcommand(0, 1);
  Request req;
  std::string batch;
  std::string solution_arg;
  bool compact = false;
  bool no_numeric = false;
  app.add_option("--batch", batch, "JSON-lines file, one request object per line");
  app.add_flag("--json", compact, "Compact single-line JSON");

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {{"classify", "Decide whether a rational solution exists"},
                              {"construct", "Construct the rational solution"},
                              {"verify", "Check a solution exactly and numerically"},
                              {"transform", "Apply a word of Backlund transformations"},
                              {"expand", "Laurent expansion of each component"},
                        {"report", "Laurent, residue and Hamiltonian invariants (B4)"}};
  for (const auto& cmd : commands) {
    auto* sc = app.add_subcommand(cmd.name, cmd.help);
    sc->add_flag("--json", compact, "Compact single-line JSON");
    if (std::string(cmd.name) != "expand") {
      sc->add_option("--system", req.system, "b4, d4 or d5")->required();
      sc->add_option("--alphas", req.alphas, "a0,a1,a2,a3,a4 as p/q; a4 may be auto")->required();
    }
    if (std::string(cmd.name) == "transform") sc->add_option("--word", req.word, "Tokens, leftmost first");
    if (std::string(cmd.name) == "verify" || std::string(cmd.name) == "transform" ||
        std::string(cmd.name) == "expand" || std::string(cmd.name) == "report") {
      auto* opt = sc->add_option("--solution", solution_arg, "Solution JSON file or inline object");
      if (std::string(cmd.name) == "verify" || std::string(cmd.name) == "expand") opt->required();
    }
    if (std::string(cmd.name) == "expand") {
      sc->add_option("--at", req.at, "0, inf or c=VALUE");
      sc->add_option("--order", req.order, "Truncation order in the local parameter");
    }
    if (std::string(cmd.name) == "verify") sc->add_flag("--no-numeric", no_numeric, "Skip the ODE check");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << error_response(UsageError, "usage", e.what()).body.dump() << "\n";
    return UsageError;
  }

  if (!batch.empty()) return run_batch(batch, out);
  auto subs = app.get_subcommands();
  if (subs.empty()) {
    out << app.help();
    return UsageError;
  }
  req.command = subs.front()->get_name();
  req.numeric = !no_numeric;
  Response resp;
  try {
    if (!solution_arg.empty()) {
      // accept the output of construct or transform as is
      json j = load_json_argument(solution_arg);
      if (j.is_object() && !j.contains("x") && j.contains("solution")) j = j.at("solution");
      req.solution = j;
    }
    resp = execute(req);
  } catch (const Error& e) {
    resp = error_response(UsageError, "parse", e.what());
  }
  out << (compact ? resp.body.dump() : resp.body.dump(2)) << "\n";
  return resp.code;
}

}  // namespace sasano::cli
