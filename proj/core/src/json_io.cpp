#include "sasano/json_io.hpp"

#include "sasano/errors.hpp"

namespace sasano {

namespace {

[[noreturn]] void bad(const std::string& what, const json& j) {
  throw ParseError(what + ": " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'", j);
  return j.at(key);
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational string", j);
}

json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) bad("expected a coefficient array", j);
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Polynomial(std::move(c));
}

json to_json(const RationalFunction& f) {
  return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RationalFunction rational_function_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return RationalFunction(rational_from_json(j));
  Polynomial num = polynomial_from_json(field(j, "num"));
  Polynomial den = j.contains("den") ? polynomial_from_json(j.at("den")) : Polynomial(Rational(1));
  if (den.is_zero()) bad("zero denominator", j);
  return RationalFunction(std::move(num), std::move(den));
}

json to_json(const Params& p) {
  json a = json::array();
  for (const auto& v : p.a) a.push_back(to_json(v));
  return json{{"system", to_string(p.system)}, {"alphas", a}};
}

Params params_from_json(const json& j) {
  Params p;
  p.system = parse_system(field(j, "system").get<std::string>());
  const json& a = field(j, "alphas");
  if (!a.is_array() || a.size() != 5) bad("expected five alphas", j);
  for (std::size_t i = 0; i < 5; ++i) p.a[i] = rational_from_json(a[i]);
  return p;
}

json to_json(const Solution& s) {
  return json{{"chart", to_string(s.chart)},
              {"x", to_json(s.u[0])},
              {"y", to_json(s.u[1])},
              {"z", to_json(s.u[2])},
              {"w", to_json(s.u[3])}};
}

Solution solution_from_json(const json& j) {
  Solution s;
  s.chart = j.contains("chart") ? parse_chart(j.at("chart").get<std::string>()) : Chart::Affine;
  static const char* keys[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < 4; ++i) s.u[i] = rational_function_from_json(field(j, keys[i]));
  return s;
}

json to_json(const Word& w) { return json(w.tokens()); }

Word word_from_json(const json& j) {
  if (j.is_string()) return Word::parse(j.get<std::string>());
  if (!j.is_array()) bad("expected a word", j);
  std::string text;
  for (const auto& t : j) {
    if (!t.is_string()) bad("word tokens must be strings", j);
    text += t.get<std::string>() + " ";
  }
  return Word::parse(text);
}

json to_json(const ClassificationResult& r) {
  json j;
  j["verdict"] = r.verdict == Verdict::Exists ? "exists" : "not_exists";
  if (r.condition) j["condition"] = *r.condition;
  if (r.word) j["word"] = to_json(*r.word);
  if (r.standard) j["standard"] = to_json(*r.standard);
  if (r.solution) {
    j["solution"] = to_json(*r.solution);
    j["chart"] = to_string(r.solution->chart);
  }
  return j;
}

namespace {

json residues_json(const std::vector<PoleResidue>& v) {
  json a = json::array();
  for (const auto& e : v) {
    a.push_back(json{{"c", to_json(e.c)}, {"res", to_json(e.res)}, {"multiple_of_c", e.multiple_of_c}});
  }
  return a;
}

}  // namespace

json to_json(const InvariantReport& r) {
  return json{{"a_inf_0", to_json(r.a_inf_0)},
              {"a_0_0", to_json(r.a_0_0)},
              {"integrality_a", r.integrality_a},
              {"b_inf_m1_plus_d_inf_m1", to_json(r.b_inf_m1_plus_d_inf_m1)},
              {"h_inf_0", to_json(r.h_inf_0)},
              {"h_0_0", to_json(r.h_0_0)},
              {"integrality_h", r.integrality_h},
              {"finite_pole_residues", residues_json(r.finite_pole_residues)},
              {"hamiltonian_residues", residues_json(r.hamiltonian_residues)},
              {"irrational_poles_unchecked", r.irrational_poles_unchecked}};
}

json to_json(const LaurentSeries& s) {
  json terms = json::array();
  const bool inf = s.point().kind == ExpansionPoint::Kind::Infinity;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    long local = s.valuation() + static_cast<long>(i);
    terms.push_back(json{{"exponent", inf ? -local : local}, {"coeff", to_json(s.coeffs()[i])}});
  }
  json j{{"point", s.point().str()}, {"order", s.order()}};
  if (!s.is_zero()) j["lead"] = s.lead();
  j["terms"] = terms;
  return j;
}

}  // namespace sasano
