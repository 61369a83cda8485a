#include "stratabench/graded_models.hpp"

#include <algorithm>

#include "stratabench/ideal.hpp"

namespace strata {

HilbertTable ci_hilbert_series(const std::vector<int>& weights,
                               const std::vector<int>& relation_degrees, int upto) {
  if (upto < 0) throw Error("upto must be non-negative");
  for (int w : weights)
    if (w < 1) throw Error("weights must be positive");
  for (int d : relation_degrees)
    if (d < 1) throw Error("relation degrees must be positive");
  size_t n = static_cast<size_t>(upto) + 1;
  std::vector<long long> c(n, 0);
  c[0] = 1;
  for (int w : weights)  // multiply by 1/(1 - t^w)
    for (size_t k = w; k < n; ++k) c[k] += c[k - w];
  for (int d : relation_degrees)  // multiply by (1 - t^d)
    for (size_t k = n; k-- > static_cast<size_t>(d);) c[k] -= c[k - d];
  return {c};
}

long long rr_prediction(long long K2, long long chi, long long pg, long long m) {
  if (m <= 0) throw Error("m must be positive");
  if (m == 1) return pg;
  return chi + m * (m - 1) / 2 * K2;
}

const Ring& canonical_ring() {
  static const Ring ring = WeightedRing::make({"x", "y1", "y2", "z1", "z2"}, {1, 2, 2, 3, 3});
  return ring;
}

Polynomial CanonicalRingModel::f1() const {
  const Ring& R = canonical_ring();
  return Polynomial::variable(R, "z1").pow(2) +
         Polynomial::variable(R, "z2") * Polynomial::variable(R, "x") * a1 + b1;
}

Polynomial CanonicalRingModel::f2() const {
  const Ring& R = canonical_ring();
  return Polynomial::variable(R, "z2").pow(2) +
         Polynomial::variable(R, "z1") * Polynomial::variable(R, "x") * a2 + b2;
}

namespace {

bool z_free(const Polynomial& p) {
  for (const auto& t : p.terms())
    if (t.exps[3] || t.exps[4]) return false;
  return true;
}

// Degree check that tolerates the zero polynomial; throws when
// inhomogeneous.
bool has_degree(const Polynomial& p, long d, const char* name) {
  if (p.is_zero()) return true;
  auto deg = weighted_degree(p);
  if (!deg) throw Error(std::string(name) + " is not weighted homogeneous");
  return *deg == d;
}

// Coefficients of a binary form in (y1, y2) of formal degree n, in
// increasing powers of y1.
std::vector<Polynomial> binary_coefficients(const Polynomial& form, size_t n) {
  static const Ring Q = WeightedRing::make({});
  std::vector<Polynomial> c(n + 1, Polynomial(Q));
  for (const auto& t : form.terms()) c.at(t.exps[1]) += Polynomial::constant(Q, t.coeff);
  return c;
}

Polynomial restrict_x_zero(const Polynomial& p) {
  std::vector<Term> keep;
  for (const auto& t : p.terms())
    if (t.exps[0] == 0) keep.push_back(t);
  return Polynomial::from_terms(p.ring(), std::move(keep));
}

Ring base_ring() {
  static const Ring ring = WeightedRing::make({"x", "y1", "y2"}, {1, 2, 2});
  return ring;
}

}  // namespace

CanringValidation validate_canring(const CanonicalRingModel& model) {
  CanringValidation v;
  const Ring& R = canonical_ring();
  for (const Polynomial* p : {&model.a1, &model.a2, &model.b1, &model.b2})
    if (!same_ring(p->ring(), R)) throw Error("model polynomials must live in the canonical ring");

  bool degrees = has_degree(model.a1, 2, "a1") & has_degree(model.a2, 2, "a2") &
                 has_degree(model.b1, 6, "b1") & has_degree(model.b2, 6, "b2");
  bool vars = z_free(model.a1) && z_free(model.a2) && z_free(model.b1) && z_free(model.b2);
  bool nonzero_b = !model.b1.is_zero() && !model.b2.is_zero();
  v.shape = degrees && vars && nonzero_b;
  if (!degrees) v.diagnostics.push_back("a1, a2 must have degree 2 and b1, b2 degree 6");
  if (!vars) v.diagnostics.push_back("a1, a2, b1, b2 must not involve z1, z2");
  if (!nonzero_b) v.diagnostics.push_back("b1 and b2 must be nonzero");
  if (!v.shape) return v;

  // Both f_i are then homogeneous of degree 6 by construction.
  if (weighted_degree(model.f1()) != 6 || weighted_degree(model.f2()) != 6)
    throw Error("f1, f2 are not homogeneous of degree 6");

  Polynomial g = poly_gcd(change_ring(model.b1, base_ring()), change_ring(model.b2, base_ring()));
  v.coprime = g.is_constant();
  if (!v.coprime) v.diagnostics.push_back("b1 and b2 share the factor " + to_string(g));

  // Singular locus of P(1,2,2,3,3) meets {x = 0}: the binary cubics
  // b_i(0, y1, y2) need no common zero. Over x = z1 = z2 = 0 the
  // equations force y = 0; the z-locus {x = y = 0} gives z1^2 = z2^2 = 0.
  static const Ring Q = WeightedRing::make({});
  Polynomial res = sylvester_resultant(binary_coefficients(restrict_x_zero(model.b1), 3),
                                       binary_coefficients(restrict_x_zero(model.b2), 3), Q);
  v.avoids_singular_locus = !res.is_zero();
  if (!v.avoids_singular_locus)
    v.diagnostics.push_back("b1(0,y1,y2) and b2(0,y1,y2) have a common zero");
  return v;
}

int bicanonical_fiber_count(const CanonicalRingModel& model, const ProjectivePoint& base) {
  CanringValidation v = validate_canring(model);
  if (!v.ok()) throw Error("invalid canonical ring model: " + v.diagnostics.front());
  if (base[0] == 0) throw Error("non-generic base point");

  static const Ring W = WeightedRing::make({"w", "z2"});
  static const Ring U = WeightedRing::make({"w"});
  Polynomial w = Polynomial::variable(W, "w"), z2 = Polynomial::variable(W, "z2");
  Polynomial f1 = model.f1(), f2 = model.f2();
  int best = 0;
  // z1 = w - c z2; c = 0 is the plain projection to z1, later values
  // separate points that share a z1 coordinate.
  for (int c = 0; c <= 6 && best < 4; ++c) {
    std::map<std::string, Polynomial> sub{
        {"x", Polynomial::constant(W, 1)},
        {"y1", Polynomial::constant(W, base[1] / base[0])},
        {"y2", Polynomial::constant(W, base[2] / base[0])},
        {"z1", w - Rational(c) * z2},
        {"z2", z2}};
    Polynomial g1 = substitute(f1, sub, W), g2 = substitute(f2, sub, W);
    if (g1.degree_in(1) == 0 || g2.degree_in(1) == 0) continue;
    Polynomial r = resultant(g1, g2, "z2");
    if (r.is_zero()) throw Error("non-generic base point");
    Polynomial ru = change_ring(r, U);
    if (ru.is_constant()) continue;
    Polynomial d = poly_gcd(ru, differentiate(ru, "w"));
    int distinct = static_cast<int>(ru.degree_in(0)) - static_cast<int>(d.degree_in(0));
    best = std::max(best, distinct);
  }
  return best;
}

CanonicalRingModel random_canonical_ring_model(std::mt19937_64& rng) {
  const Ring& R = canonical_ring();
  static const char* deg2[] = {"x^2", "y1", "y2"};
  static const char* deg6[] = {"x^6",      "x^4*y1",  "x^4*y2",  "x^2*y1^2", "x^2*y1*y2",
                               "x^2*y2^2", "y1^3",    "y1^2*y2", "y1*y2^2",  "y2^3"};
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto combo = [&](const char* const* mons, size_t n) {
    Polynomial p(R);
    for (size_t i = 0; i < n; ++i) p += Rational(coeff(rng)) * parse_polynomial(mons[i], R);
    return p;
  };
  for (;;) {
    CanonicalRingModel m{combo(deg2, 3), combo(deg2, 3), combo(deg6, 10), combo(deg6, 10)};
    if (validate_canring(m).ok()) return m;
  }
}

std::string to_string(RelativeAutomorphisms a) {
  switch (a) {
    case RelativeAutomorphisms::Z2xZ2:
      return "Z2xZ2";
    case RelativeAutomorphisms::Z2:
      return "Z2";
    case RelativeAutomorphisms::TrivialInGivenCoordinates:
      return "trivial-in-given-coordinates";
  }
  return "";
}

RelativeAutomorphisms classify_relative_automorphisms(const CanonicalRingModel& model) {
  bool z1 = model.a1.is_zero(), z2 = model.a2.is_zero();
  if (z1 && z2) return RelativeAutomorphisms::Z2xZ2;
  if (z1 || z2) return RelativeAutomorphisms::Z2;
  return RelativeAutomorphisms::TrivialInGivenCoordinates;
}

const Ring& del_pezzo_ring() {
  static const Ring ring = WeightedRing::make({"x1", "x2", "y", "z"}, {1, 1, 2, 3});
  return ring;
}

Polynomial DelPezzoModel::f6() const {
  const Ring& R = del_pezzo_ring();
  Polynomial y = Polynomial::variable(R, "y"), z = Polynomial::variable(R, "z");
  return z.pow(2) + a0 * y.pow(3) + a2 * y.pow(2) + a4 * y + a6;
}

DelPezzoReport del_pezzo_report(const DelPezzoModel& model, int upto) {
  if (upto < 1) throw Error("upto must be at least 1");
  const Ring& R = del_pezzo_ring();
  for (const Polynomial* p : {&model.a2, &model.a4, &model.a6}) {
    if (!same_ring(p->ring(), R)) throw Error("model polynomials must live in the del Pezzo ring");
    for (const auto& t : p->terms())
      if (t.exps[2] || t.exps[3]) throw Error("a2, a4, a6 must be forms in x1, x2");
  }
  Polynomial f6 = model.f6();
  auto d = weighted_degree(f6);
  if (!d || *d != 6) throw Error("f6 is not weighted homogeneous of degree 6");

  DelPezzoReport rep{f6, ci_hilbert_series({1, 1, 2, 3}, {6}, upto), true,
                     Polynomial(R), ci_hilbert_series({1, 1, 3}, {6}, upto), true};
  for (int m = 1; m <= upto; ++m)
    if (rep.anticanonical.coefficients[m] != m * (m + 1) / 2 + 1) rep.anticanonical_matches = false;
  for (int m = 2; m <= upto; ++m)
    if (rep.restricted_series.coefficients[m] != 2 * m - 1) rep.restricted_matches = false;

  static const Ring D = WeightedRing::make({"x1", "x2", "z"}, {1, 1, 3});
  Polynomial z = Polynomial::variable(D, "z");
  rep.restricted = z.pow(2) + change_ring(model.a6, D);
  return rep;
}

Polynomial elliptic_involution_a6(const Rational& l1, const Rational& l2, const Rational& l3) {
  if (l1 == 0 || l2 == 0 || l3 == 0 || l1 == l2 || l1 == l3 || l2 == l3)
    throw Error("degenerate sextic");
  const Ring& R = del_pezzo_ring();
  Polynomial x1sq = Polynomial::variable(R, "x1").pow(2), x2sq = Polynomial::variable(R, "x2").pow(2);
  Polynomial p = Polynomial::constant(R, -1);
  for (const Rational* l : {&l1, &l2, &l3}) p *= x1sq - *l * x2sq;
  return p;
}

}  // namespace strata
