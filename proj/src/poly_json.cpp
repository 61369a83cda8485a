#include "stratabench/poly_json.hpp"

namespace strata {

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"c", to_string(t.coeff)}, {"e", t.exps}});
  return {{"vars", p.ring()->names()}, {"weights", p.ring()->weights()}, {"terms", terms}};
}

namespace {

Polynomial terms_from_json(const json& j, const Ring& ring) {
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    Monomial e = t.at("e").get<Monomial>();
    if (e.size() != ring->size()) throw Error("polynomial JSON: exponent vector length mismatch");
    Rational c = parse_rational(t.at("c").get<std::string>());
    if (c == 0) throw Error("polynomial JSON: zero coefficient stored");
    terms.push_back({std::move(e), c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Polynomial polynomial_from_json(const json& j) {
  auto ring = WeightedRing::make(j.at("vars").get<std::vector<std::string>>(),
                                 j.at("weights").get<std::vector<int>>());
  return terms_from_json(j, ring);
}

Polynomial polynomial_from_json(const json& j, const Ring& ring) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), ring);
  Polynomial p = polynomial_from_json(j);
  const auto& src = *p.ring();
  for (size_t i = 0; i < src.size(); ++i) {
    auto k = ring->find(src.names()[i]);
    if (!k || ring->weights()[*k] != src.weights()[i])
      throw Error("polynomial JSON: variable '" + src.names()[i] + "' does not fit the expected ring");
  }
  return change_ring(p, ring);
}

}  // namespace strata
