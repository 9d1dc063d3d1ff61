#pragma once

#include <json.hpp>

#include "weyl/element.hpp"

namespace weyl {

// { "n": ..., "mode": "polynomial"|"laurent", "trunc": ... }
inline nlohmann::ordered_json context_json(const Context& ctx) {
  nlohmann::ordered_json j;
  j["n"] = ctx.n_pairs;
  j["mode"] = to_cstring(ctx.mode);
  j["trunc"] = ctx.trunc_order;
  return j;
}

// { "context": {...}, "result": [ { "monomial": [[m, a_m, b_m], ...],
//   "coeff": [[degree, "num/den"], ...] }, ... ] } with the terms in
// canonical display order.
inline nlohmann::ordered_json element_json(const Element& e) {
  nlohmann::ordered_json j;
  j["context"] = context_json(e.ctx());
  nlohmann::ordered_json result = nlohmann::ordered_json::array();
  for (const auto& [mono, cs] : e.sorted_terms()) {
    nlohmann::ordered_json term;
    nlohmann::ordered_json monomial = nlohmann::ordered_json::array();
    for (const auto& entry : mono.entries()) {
      monomial.push_back({entry.index, entry.p_exp, entry.q_exp});
    }
    nlohmann::ordered_json coeff = nlohmann::ordered_json::array();
    for (const auto& [deg, r] : cs.terms()) {
      coeff.push_back({deg, to_string(r)});
    }
    term["monomial"] = std::move(monomial);
    term["coeff"] = std::move(coeff);
    result.push_back(std::move(term));
  }
  j["result"] = std::move(result);
  return j;
}

}  // namespace weyl
