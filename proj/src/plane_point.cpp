#include "stratabench/plane_point.hpp"

#include <algorithm>
#include <sstream>

#include "stratabench/ideal.hpp"

namespace strata {

ProjectivePoint parse_point(std::string_view text) {
  ProjectivePoint p;
  size_t k = 0, start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ':') {
      if (k == 3) throw Error("point needs exactly three coordinates");
      p[k++] = parse_rational(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (k != 3) throw Error("point needs exactly three coordinates");
  if (p[0] == 0 && p[1] == 0 && p[2] == 0) throw Error("(0:0:0) is not a projective point");
  return p;
}

std::string to_string(const ProjectivePoint& p) {
  return "(" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + ")";
}

const Ring& plane_ring() {
  static const Ring ring = WeightedRing::make({"x", "y", "z"});
  return ring;
}

const Ring& local_ring() {
  static const Ring ring = WeightedRing::make({"s", "t"});
  return ring;
}

LocalExpansion local_expansion(const Polynomial& f, const ProjectivePoint& p) {
  const Ring& R = f.ring();
  if (R->size() != 3 || std::any_of(R->weights().begin(), R->weights().end(), [](int w) { return w != 1; }))
    throw Error("expected a polynomial in three unweighted variables");
  if (f.is_zero()) throw Error("local expansion of the zero polynomial");
  if (p[0] == 0 && p[1] == 0 && p[2] == 0) throw Error("(0:0:0) is not a projective point");
  size_t k = p[0] != 0 ? 0 : (p[1] != 0 ? 1 : 2);
  const Ring& L = local_ring();
  Polynomial s = Polynomial::variable(L, 0), t = Polynomial::variable(L, 1);
  std::map<std::string, Polynomial> sub;
  bool first = true;
  for (size_t i = 0; i < 3; ++i) {
    if (i == k) {
      sub.emplace(R->names()[i], Polynomial::constant(L, 1));
      continue;
    }
    Polynomial shift = Polynomial::constant(L, p[i] / p[k]);
    sub.emplace(R->names()[i], shift + (first ? s : t));
    first = false;
  }
  Polynomial local = substitute(f, sub, L);
  if (local.is_zero()) throw Error("polynomial vanishes identically in the chart");
  long mult = L->degree(local.terms().back().exps);
  std::vector<Term> init;
  for (const auto& term : local.terms())
    if (L->degree(term.exps) == mult) init.push_back(term);
  return {local, static_cast<unsigned>(mult), Polynomial::from_terms(L, std::move(init))};
}

bool binary_form_squarefree(const Polynomial& form) {
  if (form.is_zero()) return false;
  auto d = weighted_degree(form);
  if (!d) throw Error("binary form must be homogeneous");
  if (*d <= 1) return true;
  Exponent min_t = form.terms()[0].exps[1];
  for (const auto& term : form.terms()) min_t = std::min(min_t, term.exps[1]);
  if (min_t >= 2) return false;
  // Dehomogenize at t = 1.
  static const Ring S = WeightedRing::make({"s"});
  std::vector<Term> terms;
  for (const auto& term : form.terms()) terms.push_back({{term.exps[0]}, term.coeff});
  Polynomial g = Polynomial::from_terms(S, std::move(terms));
  if (g.is_constant()) return true;
  Polynomial dg = differentiate(g, "s");
  if (dg.is_zero()) return true;
  return poly_gcd(g, dg).is_constant();
}

}  // namespace strata
