#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cohomology.hpp"
#include "integer.hpp"
#include "kring.hpp"
#include "lens.hpp"
#include "polynomial.hpp"
#include "rep_ring.hpp"
#include "report.hpp"
#include "truncated.hpp"

// Integers are always written as decimal strings so that no precision is lost.

namespace qkring {

using json = nlohmann::ordered_json;

namespace detail {
inline Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  throw std::invalid_argument("expected an integer encoded as a decimal string");
}
inline json integer_array(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}
}  // namespace detail

/// {"one": c, "eta1": c, "eta2": c, "eta3": c, "d": {"1": c, ...}}, zero entries omitted.
inline json to_json(const RepElement& r) {
  json out = json::object();
  static const char* const names[] = {"one", "eta1", "eta2", "eta3"};
  for (std::size_t i = 0; i < 4; ++i) {
    if (r.coeff(i) != 0) out[names[i]] = r.coeff(i).str();
  }
  json d = json::object();
  for (std::size_t i = 1; i < r.params().k(); ++i) {
    if (r.coeff(basis::d(i)) != 0) d[std::to_string(i)] = r.coeff(basis::d(i)).str();
  }
  if (!d.empty()) out["d"] = std::move(d);
  return out;
}

inline RepElement rep_element_from_json(const GroupParams& p, const json& j) {
  RepElement r(p);
  static const char* const names[] = {"one", "eta1", "eta2", "eta3"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::size_t i = 0; i < 4; ++i) {
      if (key == names[i]) {
        r.coeff(i) = detail::integer_from_json(value);
        known = true;
      }
    }
    if (key == "d") {
      for (const auto& [idx, c] : value.items()) {
        const std::size_t i = std::stoul(idx);
        if (i < 1 || i >= p.k()) throw std::invalid_argument("RepElement JSON: d index out of range: " + idx);
        r.coeff(basis::d(i)) = detail::integer_from_json(c);
      }
      known = true;
    }
    if (!known) throw std::invalid_argument("RepElement JSON: unknown key " + key);
  }
  return r;
}

/// [[exponent, "coefficient"], ...] with ascending exponents and zero terms omitted.
inline json to_json(const IntPoly& p) {
  json out = json::array();
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    if (p.coeff(j) != 0) out.push_back(json::array({j, p.coeff(j).str()}));
  }
  return out;
}
inline json to_json(const PhiPoly& p) { return to_json(p.poly()); }

inline IntPoly int_poly_from_json(const json& j) {
  std::vector<Integer> coeffs;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("polynomial JSON: expected [exponent, coefficient]");
    const auto e = term[0].get<std::size_t>();
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] += detail::integer_from_json(term[1]);
  }
  return IntPoly(std::move(coeffs));
}
inline PhiPoly phi_poly_from_json(const json& j) { return PhiPoly(int_poly_from_json(j)); }

/// {"c0": s, "v1": s, "v2": s, "phi": [s, ...]} with phi holding the coefficients of phi^1..phi^k.
inline json to_json(const KElement& e) {
  json out = json::object();
  out["c0"] = e.c0().str();
  out["v1"] = e.a1().str();
  out["v2"] = e.a2().str();
  out["phi"] = detail::integer_array(e.phi());
  return out;
}

inline KElement k_element_from_json(const GroupParams& p, const json& j) {
  std::vector<Integer> coords{detail::integer_from_json(j.at("c0")), detail::integer_from_json(j.at("v1")),
                              detail::integer_from_json(j.at("v2"))};
  const json& phi = j.at("phi");
  if (phi.size() != p.k()) throw std::invalid_argument("KElement JSON: phi must have k entries");
  for (const auto& c : phi) coords.push_back(detail::integer_from_json(c));
  return KElement::from_coordinates(p, coords);
}

/// {"k": k, "coeffs": [s, ...]} with 2k coefficients.
inline json to_json(const LensElement& e) {
  json out = json::object();
  out["k"] = e.k();
  out["coeffs"] = detail::integer_array(e.coeffs());
  return out;
}

inline LensElement lens_element_from_json(const json& j) {
  const auto k = j.at("k").get<std::size_t>();
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(detail::integer_from_json(c));
  return LensElement(k, std::move(coeffs));
}

inline json to_json(const OrderCell& c) {
  json out = json::object();
  out["n"] = c.n;
  out["N"] = c.N;
  out["order"] = c.order ? power_of_two_string(*c.order) : std::string("infinite");
  out["expected"] = "2^" + std::to_string(c.expected_exponent);
  out["match"] = c.match;
  return out;
}

inline json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry = json::object();
    entry["name"] = c.name;
    entry["pass"] = c.passed;
    if (!c.detail.empty() && !c.passed) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  json out = json::object();
  out["title"] = r.title;
  out["pass"] = r.all_passed();
  out["checks"] = std::move(checks);
  return out;
}

inline json to_json(const CohGroup& g) {
  json out = json::object();
  out["group"] = g.to_string();
  out["factors"] = detail::integer_array(g.factors);
  return out;
}

inline json to_json(const ConsistencyReport& r) {
  json out = json::object();
  out["n"] = r.n;
  out["N"] = r.N;
  out["k"] = r.k;
  out["torsion"] = r.torsion.str();
  out["predicted_torsion"] = r.predicted.str();
  out["torsion_match"] = r.torsion_match;
  out["phi_order"] = r.phi_order ? r.phi_order->str() : std::string("infinite");
  out["phi_expected"] = r.phi_expected.str();
  out["phi_match"] = r.phi_match;
  if (r.phi_ratio) out["phi_ratio"] = r.phi_ratio->str();
  return out;
}

}  // namespace qkring
