#include "stratabench/implicitize.hpp"

#include "stratabench/ideal.hpp"

namespace strata {

void ParametrizationInput::validate() const {
  if (a == 0 || a == 1 || b == 0 || b == 1 || a == b || a == b * b) throw Error("degenerate parameters");
}

std::array<std::array<Rational, 2>, 6> ParametrizationInput::marked_points() const {
  return {{{0, 1}, {1, 0}, {1, 1}, {a, 1}, {b, 1}, {a, b}}};
}

const Ring& binary_ring() {
  static const Ring ring = WeightedRing::make({"u", "v"});
  return ring;
}

std::array<Polynomial, 3> build_parametrization(const ParametrizationInput& inp) {
  inp.validate();
  const Ring& R = binary_ring();
  Polynomial u = Polynomial::variable(R, "u"), v = Polynomial::variable(R, "v");
  Polynomial u_v = u - v, u_av = u - inp.a * v, u_bv = u - inp.b * v, bu_av = inp.b * u - inp.a * v;
  return {u * v * u_v * u_bv, u * u_v * u_av * bu_av, v * u_av * u_bv * bu_av};
}

std::array<std::array<bool, 6>, 3> vanishing_pattern(const ParametrizationInput& inp) {
  auto forms = build_parametrization(inp);
  auto pts = inp.marked_points();
  std::array<std::array<bool, 6>, 3> out{};
  for (size_t f = 0; f < 3; ++f)
    for (size_t i = 0; i < 6; ++i) out[f][i] = forms[f].evaluate({pts[i][0], pts[i][1]}) == 0;
  return out;
}

Implicitization implicitize_detailed(const ParametrizationInput& inp) {
  auto forms = build_parametrization(inp);
  // Weights make x - x(u,v) homogeneous.
  static const Ring G = WeightedRing::make({"u", "v", "x", "y", "z"}, {1, 1, 4, 4, 4});
  std::map<std::string, Polynomial> lift{{"u", Polynomial::variable(G, "u")}, {"v", Polynomial::variable(G, "v")}};
  std::vector<Polynomial> graph;
  const char* names[] = {"x", "y", "z"};
  for (size_t i = 0; i < 3; ++i) graph.push_back(Polynomial::variable(G, names[i]) - substitute(forms[i], lift, G));
  auto kernel = eliminate(graph, {"u", "v"});
  if (kernel.size() != 1) throw Error("unexpected image degree");
  Polynomial f = change_ring(kernel[0], plane_ring());
  auto d = weighted_degree(f);
  if (!d || *d != 4) throw Error("unexpected image degree");

  Implicitization out{f, 1, true};
  Rational c = f.coefficient({0, 2, 2});
  if (c != 0) {
    out.scale = (inp.b * inp.b - inp.b) / c;
  } else {
    out.anchored_to_y2z2 = false;
    out.scale = 1 / f.leading_term().coeff;
  }
  out.quartic = f * out.scale;
  return out;
}

Polynomial implicitize(const ParametrizationInput& inp) { return implicitize_detailed(inp).quartic; }

Polynomial reference_quartic(const ParametrizationInput& inp) {
  inp.validate();
  const Rational &a = inp.a, &b = inp.b;
  Rational a2 = a * a, a3 = a2 * a, a4 = a3 * a, b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  const Ring& R = plane_ring();
  auto mono = [&](unsigned i, unsigned j, unsigned k, const Rational& c) {
    return Polynomial::monomial(R, {i, j, k}, c);
  };
  return mono(2, 2, 0, -a * b3 + b4 + a2 * b - a * b2) +
         mono(2, 1, 1, a2 * b3 - a3 * b - a * b3 - a3 + 3 * a2 * b - a * b2) +
         mono(1, 2, 1, a * b2 - 2 * b3 - a2 + a * b + b2) + mono(2, 0, 2, a4 - a3 * b - a3 + a2 * b) +
         mono(1, 1, 2, 2 * a2 * b - a * b2 - a2 - a * b + b2) + mono(0, 2, 2, b2 - b);
}

bool verify_node(const Polynomial& q, const ProjectivePoint& p) {
  std::vector<Rational> pt(p.begin(), p.end());
  if (q.evaluate(pt) != 0) return false;
  for (const char* v : {"x", "y", "z"})
    if (differentiate(q, v).evaluate(pt) != 0) return false;
  LocalExpansion e = local_expansion(q, p);
  return e.multiplicity == 2 && binary_form_squarefree(e.initial_form);
}

bool compare_up_to_scalar(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw Error("polynomials live in different rings");
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  Rational lambda = f.leading_term().coeff / g.leading_term().coeff;
  return f == g * lambda;
}

Polynomial pull_back(const Polynomial& q, const std::array<Polynomial, 3>& forms) {
  return substitute(q, {{"x", forms[0]}, {"y", forms[1]}, {"z", forms[2]}}, binary_ring());
}

std::array<Polynomial, 3> compose_with_tau(const ParametrizationInput& inp, const std::array<Polynomial, 3>& forms) {
  const Ring& R = binary_ring();
  std::map<std::string, Polynomial> tau{{"u", inp.a * Polynomial::variable(R, "v")}, {"v", Polynomial::variable(R, "u")}};
  return {substitute(forms[0], tau, R), substitute(forms[1], tau, R), substitute(forms[2], tau, R)};
}

}  // namespace strata
