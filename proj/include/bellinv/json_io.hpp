#ifndef BELLINV_JSON_IO_HPP
#define BELLINV_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "bellinv/errors.hpp"
#include "bellinv/lambda.hpp"
#include "bellinv/multipoly.hpp"
#include "bellinv/problem_spec.hpp"
#include "bellinv/rational.hpp"
#include "bellinv/report.hpp"
#include "bellinv/series.hpp"
#include "bellinv/unipoly.hpp"

namespace bellinv {

// nlohmann::json with the default (ordered) object map: keys serialize
// sorted, which is part of the canonical-output contract.
using Json = nlohmann::json;

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational encoded as a string, got: " + j.dump());
  return Rational::from_string(j.get<std::string>());
}

/// Canonical term list: [{"coef": "n/d", "exps": {"var": exp, ...}}, ...] in
/// graded-lex order (leading term first).
inline Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, coef] : p.terms()) {
    Json exps = Json::object();
    for (const auto& [v, e] : mono.factors) exps[std::to_string(v)] = e;
    terms.push_back(Json{{"exps", std::move(exps)}, {"coef", coef.to_string()}});
  }
  return terms;
}

inline MultiPoly multipoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a polynomial term list, got: " + j.dump());
  MultiPoly p;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coef") || !term.contains("exps"))
      throw ParseError("polynomial term needs \"coef\" and \"exps\": " + term.dump());
    std::vector<std::pair<unsigned, unsigned>> factors;
    for (const auto& [key, val] : term.at("exps").items()) {
      unsigned var = 0;
      try {
        var = static_cast<unsigned>(std::stoul(key));
      } catch (const std::exception&) {
        throw ParseError("variable index is not a number: " + key);
      }
      if (!val.is_number_unsigned()) throw ParseError("exponent must be a nonnegative integer");
      factors.emplace_back(var, val.get<unsigned>());
    }
    p += MultiPoly::term(rational_from_json(term.at("coef")), std::move(factors));
  }
  return p;
}

/// Dense coefficient array, index i = coefficient of u^i.
inline Json to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (size_t i = 0; i < p.size(); ++i) arr.push_back(p.coeff(i).to_string());
  return arr;
}

inline UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array, got: " + j.dump());
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs));
}

template <class R>
Json series_to_json(const Series<R>& s) {
  Json coeffs = Json::array();
  for (int n = 0; n <= s.order(); ++n) coeffs.push_back(to_json(s[n]));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline Series<Rational> series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParseError("series needs \"order\" and \"coeffs\"");
  const int order = j.at("order").get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return Series<Rational>(order, std::move(coeffs));
}

inline Json to_json(const ProblemSpec& spec) {
  Json terms = Json::array();
  for (const auto& t : spec.terms())
    terms.push_back(Json{{"a", t.a.to_string()}, {"q", t.q.to_string()}});
  return Json{{"p", spec.p().to_string()}, {"terms", std::move(terms)}};
}

inline ProblemSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("terms"))
    throw ParseError("spec needs \"p\" and \"terms\"");
  std::vector<SpecTerm> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("a") || !t.contains("q"))
      throw ParseError("spec term needs \"a\" and \"q\": " + t.dump());
    terms.push_back(SpecTerm{rational_from_json(t.at("a")), rational_from_json(t.at("q"))});
  }
  return ProblemSpec(rational_from_json(j.at("p")), std::move(terms));
}

inline Json sequence_to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return Json{{"values", std::move(arr)}};
}

inline std::vector<Rational> sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values"))
    throw ParseError("sequence needs a \"values\" array");
  std::vector<Rational> values;
  size_t pos = 0;
  for (const auto& v : j.at("values")) {
    ++pos;
    try {
      values.push_back(rational_from_json(v));
    } catch (const ParseError& e) {
      throw ParseError("values[" + std::to_string(pos) + "]: " + e.what());
    }
  }
  return values;
}

inline Json to_json(const LambdaTable& t) {
  Json polys = Json::array();
  for (const auto& p : t.polys) polys.push_back(to_json(p));
  return Json{{"spec", to_json(t.spec)}, {"polys", std::move(polys)}, {"indeterminate", "u=p*s"}};
}

inline Json to_json(const FTable& t) {
  Json polys = Json::array();
  for (const auto& p : t.polys) polys.push_back(to_json(p));
  return Json{{"spec", to_json(t.spec)},
              {"polys", std::move(polys)},
              {"indeterminate", "u=p*s"},
              {"first_index", 1}};
}

inline Json to_json(const VerifyCase& c) {
  Json j{{"id", c.id},
         {"params", c.params},
         {"n_range", c.n_range},
         {"status", c.status},
         {"witness", c.witness}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  return Json{{"suite", r.suite},         {"order", r.order},
              {"seed", r.seed},           {"tool_version", r.tool_version},
              {"failures", r.failures()}, {"cases", std::move(cases)}};
}

}  // namespace bellinv

#endif  // BELLINV_JSON_IO_HPP
