#include "cuntz/serialize.hpp"

#include <stdexcept>

namespace cuntz {

using nlohmann::json;

json to_json(const Element& x) {
  json terms = json::array();
  for (const Term& t : x.terms()) {
    terms.push_back({{"re", rational_string(t.coeff.re())},
                     {"im", rational_string(t.coeff.im())},
                     {"alpha", t.alpha.to_string()},
                     {"beta", t.beta.to_string()}});
  }
  return {{"n", x.alphabet()}, {"terms", std::move(terms)}};
}

Element element_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Term> raw;
    for (const auto& t : j.at("terms")) {
      raw.push_back({Coefficient::from_parts(t.at("re").get<std::string>(),
                                             t.at("im").get<std::string>()),
                     MultiIndex::parse(n, t.at("alpha").get<std::string>()),
                     MultiIndex::parse(n, t.at("beta").get<std::string>())});
    }
    return Element::from_terms(n, std::move(raw));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed element JSON: ") + e.what());
  }
}

std::string dump_element(const Element& x) { return to_json(x).dump(); }

Element parse_element_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("element JSON: ") + e.what());
  }
  return element_from_json(j);
}

json to_json(const ScalingReport& report) {
  json profile = json::array();
  for (const auto& [mu, min] : report.profile)
    profile.push_back({{"mu", mu.to_string()}, {"min", min}});
  json out = {{"verdict", std::string(to_string(report.verdict))},
              {"depth", report.depth},
              {"budget", report.period_budget},
              {"threshold_divisor", report.threshold_divisor},
              {"profile", std::move(profile)}};
  if (report.witness) {
    out["witness"] = {{"kappa", report.witness->kappa.to_string()},
                      {"mu", report.witness->mu.to_string()},
                      {"nu", report.witness->nu.to_string()},
                      {"checked_range", report.witness->checked_range}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const PLMap& map) {
  json pieces = json::array();
  for (const auto& p : map.pieces()) {
    pieces.push_back(
        {{"source", {dyadic_string(p.source_lo), dyadic_string(p.source_hi)}},
         {"target", {dyadic_string(p.target_lo), dyadic_string(p.target_hi)}},
         {"slope", "2^" + std::to_string(p.slope_exponent)}});
  }
  return pieces;
}

json to_json(const TableUnitary& w) {
  json rows = json::array();
  for (const auto& p : w.pairs())
    rows.push_back({{"alpha", p.alpha.to_string()}, {"beta", p.beta.to_string()}});
  return rows;
}

}  // namespace cuntz
