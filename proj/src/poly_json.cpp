#include "vsasm/poly_json.hpp"

#include <sstream>

namespace vsasm {

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json j;
  j["vars"] = p.ring()->vars();
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    nlohmann::json jt;
    jt["c"] = t.c.str();
    jt["e"] = t.e;
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j, RingPtr ring) {
  const auto names = j.at("vars").get<std::vector<std::string>>();
  if (!ring || ring->vars() != names) ring = Ring::of(names);
  std::vector<Term> terms;
  for (const auto& jt : j.at("terms")) {
    Term t;
    t.c = Int(jt.at("c").get<std::string>());
    t.e = jt.at("e").get<Expo>();
    if (t.e.size() != ring->size())
      throw ring_error("exponent vector length does not match vars");
    terms.push_back(std::move(t));
  }
  return LaurentPoly::from_terms(ring, std::move(terms));
}

}  // namespace vsasm
