#pragma once

// JSON forms:
//   polynomial: {"variables": [...], "terms": [{"exponents": [...], "coefficient": "<decimal>"}, ...]}
//               terms sorted lexicographically by exponent vector
//   report:     {"check", "scope", "status", "items": [{"label", "status", "detail"}], "witness"}

#include <string>
#include <vector>

#include <json.hpp>

#include "rank2cc/check_report.hpp"
#include "rank2cc/laurent.hpp"

namespace rank2cc {

inline nlohmann::json to_json(const LaurentPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.sorted_terms()) {
    std::vector<std::int64_t> exps(e.begin(), e.end());
    terms.push_back({{"exponents", exps}, {"coefficient", c.str()}});
  }
  return {{"variables", p.context().names()}, {"terms", std::move(terms)}};
}

inline LaurentPolynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    VariableContext ctx(j.at("variables").get<std::vector<std::string>>());
    LaurentPolynomial p(ctx);
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exponents").get<std::vector<std::int32_t>>();
      if (exps.size() != ctx.arity()) throw InvalidArgument("term has wrong number of exponents");
      Exponents e(exps.begin(), exps.end());
      p.add_term(e, Coefficient(t.at("coefficient").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    // the integer backend rejects malformed decimal strings with runtime_error
    if (dynamic_cast<const Error*>(&e)) throw;
    throw InvalidArgument(std::string("malformed coefficient: ") + e.what());
  }
}

inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : r.items)
    items.push_back({{"label", it.label}, {"status", status_name(it.status)}, {"detail", it.detail}});
  nlohmann::json j = {{"check", r.check},
                      {"scope", r.scope},
                      {"status", status_name(r.status())},
                      {"items", std::move(items)}};
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

}  // namespace rank2cc
