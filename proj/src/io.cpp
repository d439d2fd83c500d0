#include "constel/io.hpp"

#include <stdexcept>
#include <string>

namespace constel {

namespace {

void read_family(const nlohmann::json& obj, Family family, std::vector<Factor>& out) {
  if (obj.is_null()) return;
  if (!obj.is_object()) throw std::invalid_argument("poly_from_json: exponent map must be an object");
  for (const auto& [index, exp] : obj.items()) {
    const auto i = static_cast<std::uint32_t>(std::stoul(index));
    out.push_back({Var(family, i), exp.get<std::uint32_t>()});
  }
}

}  // namespace

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    nlohmann::json v = nlohmann::json::object();
    nlohmann::json x = nlohmann::json::object();
    for (const Factor& f : mono.factors())
      (f.var.family() == Family::V ? v : x)[std::to_string(f.var.index())] = f.exp;
    terms.push_back({{"coeff", coeff.get_str()}, {"V", std::move(v)}, {"x", std::move(x)}});
  }
  return terms;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : j) {
    std::vector<Factor> factors;
    read_family(t.value("V", nlohmann::json()), Family::V, factors);
    read_family(t.value("x", nlohmann::json()), Family::X, factors);
    Integer coeff(t.at("coeff").get<std::string>(), 10);
    terms.emplace_back(Monomial(std::move(factors)), std::move(coeff));
  }
  return MultiPoly::from_terms(std::move(terms));
}

nlohmann::json to_json(const XSeries& s) {
  nlohmann::json order = s.is_exact() ? nlohmann::json(nullptr) : nlohmann::json(s.order());
  return {{"order", order}, {"terms", to_json(s.poly())}};
}

XSeries series_from_json(const nlohmann::json& j) {
  MultiPoly p = poly_from_json(j.at("terms"));
  const auto& order = j.at("order");
  return XSeries(std::move(p), order.is_null() ? XSeries::kExact : order.get<int>());
}

}  // namespace constel
