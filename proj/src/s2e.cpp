#include "stratabench/s2e.hpp"

#include <algorithm>
#include <functional>

namespace strata {

namespace {

constexpr size_t kCurveVars = 6;
// exponent slots: z1 x1 y1 z2 x2 y2
constexpr int kFactorWeight[3] = {1, 2, 3};

Monomial curve_part(const Monomial& e) { return Monomial(e.begin(), e.begin() + kCurveVars); }

}  // namespace

void WeierstrassParams::validate() const {
  if (4 * a * a * a + 27 * b * b == 0) throw Error("singular Weierstrass curve (4a^3 + 27b^2 = 0)");
}

void GluingParams::validate() const {
  if (!symbolic && alpha == 0 && beta == 0) throw Error("invalid glue: alpha and beta both zero");
}

BiWeierstrass::BiWeierstrass(WeierstrassParams params, GluingParams glue)
    : params_(std::move(params)),
      glue_(std::move(glue)),
      ring_(glue_.symbolic ? WeightedRing::make({"z1", "x1", "y1", "z2", "x2", "y2", "alpha", "beta"},
                                                {1, 2, 3, 1, 2, 3, 1, 1})
                           : WeightedRing::make({"z1", "x1", "y1", "z2", "x2", "y2"}, {1, 2, 3, 1, 2, 3})),
      coeffs_(glue_.symbolic ? WeightedRing::make({"alpha", "beta"}) : WeightedRing::make({})),
      cubic_{Polynomial(ring_), Polynomial(ring_)} {
  params_.validate();
  glue_.validate();
  for (int f = 0; f < 2; ++f) {
    std::string i = std::to_string(f + 1);
    Polynomial z = var("z" + i), x = var("x" + i);
    cubic_[f] = x.pow(3) + params_.a * x * z.pow(4) + params_.b * z.pow(6);
    cubic_powers_[f].push_back(constant(1));
  }
}

Polynomial BiWeierstrass::alpha() const { return glue_.symbolic ? var("alpha") : constant(glue_.alpha); }
Polynomial BiWeierstrass::beta() const { return glue_.symbolic ? var("beta") : constant(glue_.beta); }

const Polynomial& BiWeierstrass::weierstrass_power(int factor, unsigned n) const {
  auto& cache = cubic_powers_[factor];
  while (cache.size() <= n) cache.push_back(cache.back() * cubic_[factor]);
  return cache[n];
}

Polynomial BiWeierstrass::normal_form(const Polynomial& p) const {
  if (!same_ring(p.ring(), ring_)) throw Error("element outside the bi-Weierstrass ring");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    unsigned n1 = t.exps[2] / 2, n2 = t.exps[5] / 2;
    if (n1 == 0 && n2 == 0) {
      out.push_back(t);
      continue;
    }
    Monomial base = t.exps;
    base[2] %= 2;
    base[5] %= 2;
    Polynomial r = Polynomial::monomial(ring_, base, t.coeff) * weierstrass_power(0, n1) * weierstrass_power(1, n2);
    out.insert(out.end(), r.terms().begin(), r.terms().end());
  }
  return Polynomial::from_terms(ring_, std::move(out));
}

Polynomial BiWeierstrass::power(const Polynomial& p, unsigned n) const {
  Polynomial r = constant(1);
  for (unsigned i = 0; i < n; ++i) r = mul(r, p);
  return r;
}

Polynomial BiWeierstrass::sigma(const Polynomial& p) const {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial e = t.exps;
    for (size_t i = 0; i < 3; ++i) std::swap(e[i], e[i + 3]);
    out.push_back({e, t.coeff});
  }
  return Polynomial::from_terms(ring_, std::move(out));
}

std::optional<Bidegree> BiWeierstrass::bidegree(const Polynomial& p) const {
  std::optional<Bidegree> d;
  for (const auto& t : p.terms()) {
    Bidegree here{0, 0};
    for (size_t i = 0; i < 3; ++i) {
      here.first += kFactorWeight[i] * long(t.exps[i]);
      here.second += kFactorWeight[i] * long(t.exps[i + 3]);
    }
    if (d && *d != here) return std::nullopt;
    d = here;
  }
  return d;
}

Polynomial BiWeierstrass::antidiagonal(const Polynomial& p) const {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial e = t.exps;
    for (size_t i = 0; i < 3; ++i) {
      e[i] += e[i + 3];
      e[i + 3] = 0;
    }
    out.push_back({e, t.exps[5] % 2 ? Rational(-t.coeff) : t.coeff});
  }
  return normal_form(Polynomial::from_terms(ring_, std::move(out)));
}

std::map<Monomial, Polynomial> BiWeierstrass::coordinates(const Polynomial& p) const {
  std::map<Monomial, std::vector<Term>> parts;
  for (const auto& t : p.terms())
    parts[curve_part(t.exps)].push_back({Monomial(t.exps.begin() + kCurveVars, t.exps.end()), t.coeff});
  std::map<Monomial, Polynomial> out;
  for (auto& [m, terms] : parts) out.emplace(m, Polynomial::from_terms(coeffs_, std::move(terms)));
  return out;
}

PolyMatrix BiWeierstrass::coordinate_matrix(const std::vector<Polynomial>& elems) const {
  std::vector<std::map<Monomial, Polynomial>> coords;
  std::map<Monomial, size_t> rows;
  for (const auto& e : elems) {
    coords.push_back(coordinates(normal_form(e)));
    for (const auto& [m, c] : coords.back()) rows.emplace(m, 0);
  }
  size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  PolyMatrix out(rows.size(), PolyVector(elems.size(), Polynomial(coeffs_)));
  for (size_t j = 0; j < elems.size(); ++j)
    for (const auto& [m, c] : coords[j]) out[rows[m]][j] = c;
  return out;
}

size_t BiWeierstrass::rank(const std::vector<Polynomial>& elems) const {
  return strata::rank(coordinate_matrix(elems), coeffs_);
}

std::vector<PolyVector> BiWeierstrass::relations(const std::vector<Polynomial>& elems) const {
  return kernel_basis(coordinate_matrix(elems), elems.size(), coeffs_);
}

Polynomial BiWeierstrass::combine(const PolyVector& c, const std::vector<Polynomial>& elems) const {
  if (c.size() != elems.size()) throw Error("combination length mismatch");
  std::map<std::string, Polynomial> lift;
  for (const auto& n : coeffs_->names()) lift.emplace(n, var(n));
  Polynomial out(ring_);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    out += substitute(c[i], lift, ring_) * elems[i];
  }
  return out;
}

std::vector<Polynomial> invariant_basis(const BiWeierstrass& ctx, int m) {
  if (m < 1 || m > 8) throw Error("invariant_basis: degree must be in 1..8");
  // (i, j, k) with i + 2j + 3k = m, k <= 1
  std::vector<std::array<Exponent, 3>> single;
  for (Exponent k = 0; k <= 1; ++k)
    for (Exponent j = 0; 2 * j + 3 * k <= Exponent(m); ++j) single.push_back({Exponent(m) - 2 * j - 3 * k, j, k});
  const size_t n = ctx.ring()->size();
  auto tensor = [&](const std::array<Exponent, 3>& u, const std::array<Exponent, 3>& v) {
    Monomial e(n, 0);
    for (size_t i = 0; i < 3; ++i) {
      e[i] = u[i];
      e[i + 3] = v[i];
    }
    return Polynomial::monomial(ctx.ring(), e);
  };
  std::vector<Polynomial> out;
  for (size_t p = 0; p < single.size(); ++p)
    for (size_t q = p; q < single.size(); ++q)
      out.push_back(p == q ? tensor(single[p], single[q]) : tensor(single[p], single[q]) + tensor(single[q], single[p]));
  return out;
}

std::array<Polynomial, 7> t_generators(const BiWeierstrass& ctx) {
  Polynomial z1 = ctx.var("z1"), x1 = ctx.var("x1"), y1 = ctx.var("y1");
  Polynomial z2 = ctx.var("z2"), x2 = ctx.var("x2"), y2 = ctx.var("y2");
  return {z1 * z2,
          x1 * x2,
          z1 * z1 * x2 + x1 * z2 * z2,
          y1 * y2,
          z1 * x1 * y2 + y1 * z2 * x2,
          z1.pow(3) * y2 + y1 * z2.pow(3),
          z1 * y1 * x2 * x2 + x1 * x1 * z2 * y2};
}

const std::array<Bidegree, 7>& t_bidegrees() {
  static const std::array<Bidegree, 7> d{{{1, 1}, {2, 2}, {2, 2}, {3, 3}, {3, 3}, {3, 3}, {4, 4}}};
  return d;
}

std::vector<Polynomial> antidiagonal_kernel(const BiWeierstrass& ctx, int m) {
  if (m < 1 || m > 6) throw Error("antidiagonal_kernel: degree must be in 1..6");
  auto basis = invariant_basis(ctx, m);
  std::vector<Polynomial> images;
  for (const auto& e : basis) images.push_back(ctx.antidiagonal(e));
  std::vector<Polynomial> out;
  for (const auto& k : ctx.relations(images)) out.push_back(ctx.combine(k, basis));
  return out;
}

namespace {

Polynomial s4_of(const BiWeierstrass& ctx, const std::array<Polynomial, 7>& t) {
  return ctx.alpha() * t[4] + ctx.beta() * t[5];
}

}  // namespace

std::vector<Polynomial> conductor_vanishing_basis(const BiWeierstrass& ctx, int m) {
  if (m < 2 || m > 5) throw Error("conductor_vanishing_basis: degree must be in 2..5");
  if (!ctx.glue().generic()) throw Error("non-generic conductor");
  auto t = t_generators(ctx);
  Polynomial s4 = s4_of(ctx, t);
  auto basis = invariant_basis(ctx, m);
  const size_t n = basis.size();
  std::vector<Polynomial> cols;
  for (const auto& e : basis) cols.push_back(ctx.mul(t[4], e));
  for (const auto& e : basis) cols.push_back(-ctx.mul(s4, e));
  std::vector<Polynomial> out;
  for (const auto& k : ctx.relations(cols)) {
    PolyVector c(k.begin(), k.begin() + n);
    if (std::all_of(c.begin(), c.end(), [](const Polynomial& p) { return p.is_zero(); }))
      throw Error("non-generic conductor");
    out.push_back(ctx.combine(c, basis));
  }
  return out;
}

SGenerators s_generators_unchecked(const BiWeierstrass& ctx) {
  const Rational &a = ctx.params().a, &b = ctx.params().b;
  Polynomial al = ctx.alpha(), be = ctx.beta();
  auto t = t_generators(ctx);
  auto M = [&](const Polynomial& p, const Polynomial& q) { return ctx.mul(p, q); };
  Polynomial t00 = M(t[0], t[0]), t000 = M(t00, t[0]);

  Polynomial s0 = t[0];
  Polynomial s1 = al * t[2] + be * t[1];
  Polynomial s2 = (2 * b * al * be - a * be * be) * t00 + b * al * al * t[1] + (a * al * al + be * be) * t[2];
  Polynomial s3 = (b * b * al.pow(3) + b * be.pow(3)) * t000 +
                  (a * b * al.pow(3) + 3 * b * al * be * be - a * be.pow(3)) * M(t[0], t[1]) +
                  (a * a * al.pow(3) + 3 * b * al * al * be) * M(t[0], t[2]) +
                  (-b * al.pow(3) + a * al * al * be + be.pow(3)) * t[3];
  Polynomial s4 = s4_of(ctx, t);
  Polynomial t0000 = M(t00, t00);
  Polynomial l1 = (b * al - a * be) * t0000 + be * M(t00, t[2]) - be * M(t[1], t[1]) - al * M(t[1], t[2]) -
                  al * M(t[0], t[3]);
  Polynomial l2 = b * be * t0000 + a * al * M(t00, t[2]) + b * al * M(t00, t[1]) - al * M(t[2], t[2]) -
                  be * M(t[1], t[2]) + be * M(t[0], t[3]);

  SGenerators out{{s0, s1, s2, s3, s4}, l1, l2, Polynomial(ctx.coefficients()), false, false,
                  Polynomial(ctx.ring()), Polynomial(ctx.ring())};

  out.residual_one = ctx.normal_form(M(M(s0, s0), s2) - M(s1, s1) - (be * l1 + al * l2));
  Polynomial t0s4 = M(t[0], s4);
  if (out.residual_one.is_zero()) {
    out.identity_one = true;
  } else if (auto q = try_divide(out.residual_one, t0s4)) {
    auto coords = ctx.coordinates(*q);
    if (coords.size() == 1 && coords.begin()->first == Monomial(kCurveVars, 0)) {
      out.identity_one = true;
      out.scalar_one = coords.begin()->second;
      out.residual_one = Polynomial(ctx.ring());
    }
  }
  out.residual_two =
      ctx.normal_form(M(s1, s2) + b * al * al * l1 + (a * al * al + be * be) * l2 - M(t[0], s3));
  out.identity_two = out.residual_two.is_zero();
  return out;
}

SGenerators s_generators(const BiWeierstrass& ctx) {
  if (!ctx.glue().generic()) throw Error("non-generic conductor");
  SGenerators s = s_generators_unchecked(ctx);
  if (!s.identity_one) throw Error("first ring identity fails; residual " + to_string(s.residual_one));
  if (!s.identity_two) throw Error("second ring identity fails; residual " + to_string(s.residual_two));
  return s;
}

RelationCoefficients relation_coefficients(const BiWeierstrass& ctx, const Polynomial& X, const Polynomial& Y1,
                                           const Polynomial& Y2) {
  const Rational &a = ctx.params().a, &b = ctx.params().b;
  Polynomial al = ctx.alpha(), be = ctx.beta();
  auto P = [&](std::initializer_list<const Polynomial*> fs) {
    Polynomial r = ctx.constant(1);
    for (const Polynomial* f : fs) r = ctx.mul(r, *f);
    return r;
  };
  const Polynomial *x = &X, *u = &Y1, *v = &Y2;
  Polynomial x2 = P({x, x}), x4 = P({x, x, x, x}), x6 = ctx.mul(x4, x2);
  Polynomial b1 = -(b * b * x6 + a * b * ctx.mul(x4, Y1) + b * P({u, u, u}) + a * a * ctx.mul(x4, Y2) -
                    3 * b * P({x, x, u, v}) + a * P({u, u, v}) - 2 * a * P({x, x, v, v}) + P({v, v, v}));
  Polynomial a2 = -(2 * be * be * x2 + 2 * al * be * Y1 + 2 * al * al * Y2);
  Polynomial b2 = -(2 * b * be * be * x6 + (2 * b * al * be + a * be * be) * ctx.mul(x4, Y1) +
                    b * al * al * P({x, x, u, u}) + be * be * P({u, u, u}) +
                    (-2 * b * al * al + 4 * a * al * be) * ctx.mul(x4, Y2) +
                    (a * al * al - 3 * be * be) * P({x, x, u, v}) + 2 * al * be * P({u, u, v}) -
                    4 * al * be * P({x, x, v, v}) + al * al * P({u, v, v}));
  return {ctx.normal_form(b1), ctx.normal_form(a2), ctx.normal_form(b2)};
}

namespace {

// num/den when den divides num in the coefficient ring.
std::optional<Polynomial> ratio(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) return std::nullopt;
  return try_divide(num, den);
}

}  // namespace

TheoremReport search_theorem_relations(const BiWeierstrass& ctx) {
  if (!ctx.glue().generic()) throw Error("non-generic conductor");
  auto t = t_generators(ctx);
  SGenerators sg = s_generators_unchecked(ctx);
  const auto& s = sg.s;
  const std::vector<std::pair<std::string, Polynomial>> deg2{{"s1", s[1]}, {"s2", s[2]}, {"t1", t[1]}, {"t2", t[2]}};
  const std::vector<std::pair<std::string, Polynomial>> deg3{{"s3", s[3]}, {"s4", s[4]}, {"t3", t[3]}};
  Polynomial x = s[0];
  Polynomial x2 = ctx.mul(x, x), x3 = ctx.mul(x2, x);
  Polynomial xs1 = ctx.mul(x, s[1]), xs2 = ctx.mul(x, s[2]);

  TheoremReport report;
  std::map<std::pair<size_t, size_t>, RelationCoefficients> coeff_cache;
  for (size_t i = 0; i < deg2.size(); ++i)
    for (size_t j = 0; j < deg2.size(); ++j) {
      if (i == j) continue;
      const Polynomial &Y1 = deg2[i].second, &Y2 = deg2[j].second;
      bool ring2 = ctx.rank({x2, s[1], s[2], Y1, Y2}) == 3 && ctx.rank({x2, Y1, Y2}) == 3;
      Polynomial xy1 = ctx.mul(x, Y1), xy2 = ctx.mul(x, Y2);
      for (size_t k = 0; k < deg3.size(); ++k)
        for (size_t l = 0; l < deg3.size(); ++l) {
          if (k == l) continue;
          const Polynomial &Z1 = deg3[k].second, &Z2 = deg3[l].second;
          AssignmentTrial trial;
          trial.names = {"s0", deg2[i].first, deg2[j].first, deg3[k].first, deg3[l].first};
          bool ring3 = ctx.rank({x3, xs1, xs2, s[3], s[4], Z1, Z2}) == 5 && ctx.rank({x3, xy1, xy2, Z1, Z2}) == 5;
          trial.same_ring = ring2 && ring3;
          if (!trial.same_ring) {
            trial.note = "images do not generate the same ring";
            report.trials.push_back(std::move(trial));
            continue;
          }
          auto it = coeff_cache.find({i, j});
          if (it == coeff_cache.end()) it = coeff_cache.emplace(std::make_pair(i, j), relation_coefficients(ctx, x, Y1, Y2)).first;
          const RelationCoefficients& rc = it->second;

          // lambda^2 Z1^2 + b1 = 0
          auto k1 = ctx.relations({ctx.mul(Z1, Z1), rc.b1});
          if (k1.size() != 1 || k1[0][1].is_zero()) {
            trial.note = "first relation has no scalar solution";
            report.trials.push_back(std::move(trial));
            continue;
          }
          trial.lambda_sq = ratio(k1[0][0], k1[0][1]);
          // mu^2 Z2^2 + lambda x Z1 a2 + b2 = 0
          auto k2 = ctx.relations({ctx.mul(Z2, Z2), ctx.mul(ctx.mul(x, Z1), rc.a2), rc.b2});
          if (k2.size() != 1 || k2[0][2].is_zero()) {
            trial.note = "second relation has no scalar solution";
            report.trials.push_back(std::move(trial));
            continue;
          }
          trial.mu_sq = ratio(k2[0][0], k2[0][2]);
          trial.lambda = ratio(k2[0][1], k2[0][2]);
          if (!trial.lambda_sq || !trial.mu_sq || !trial.lambda) {
            trial.note = "scalars outside the coefficient ring";
          } else if (trial.lambda_sq->is_zero() || trial.mu_sq->is_zero() || trial.lambda->is_zero()) {
            trial.note = "degenerate scalar";
          } else if (*trial.lambda * *trial.lambda != *trial.lambda_sq) {
            trial.note = "inconsistent lambda";
          } else {
            trial.solved = true;
            report.successes.push_back(report.trials.size());
          }
          report.trials.push_back(std::move(trial));
        }
    }
  return report;
}

TheoremReport verify_theorem_relations(const BiWeierstrass& ctx) {
  TheoremReport r = search_theorem_relations(ctx);
  if (r.successes.empty()) {
    // residuals of the literal (s3, s4) and (s4, s3) assignments
    auto sg = s_generators_unchecked(ctx);
    auto rc = relation_coefficients(ctx, sg.s[0], sg.s[1], sg.s[2]);
    std::string msg = "no assignment satisfies the relations";
    for (auto [z1, z2] : {std::pair{3, 4}, std::pair{4, 3}}) {
      Polynomial r1 = ctx.normal_form(ctx.mul(sg.s[z1], sg.s[z1]) + rc.b1);
      Polynomial r2 = ctx.normal_form(ctx.mul(sg.s[z2], sg.s[z2]) + ctx.mul(ctx.mul(sg.s[0], sg.s[z1]), rc.a2) + rc.b2);
      msg += "; (s" + std::to_string(z1) + ", s" + std::to_string(z2) + "): r1 has " + std::to_string(r1.size()) +
             " terms, r2 has " + std::to_string(r2.size()) + " terms";
    }
    throw Error(msg);
  }
  return r;
}

bool generation_check(const BiWeierstrass& ctx, int upto) { return generation_check(ctx, upto, {0, 1, 2, 3, 4, 5, 6}); }

bool generation_check(const BiWeierstrass& ctx, int upto, const std::vector<size_t>& which_t) {
  if (upto < 1 || upto > 6) throw Error("generation_check: degree must be in 1..6");
  auto t = t_generators(ctx);
  const auto& deg = t_bidegrees();
  for (int m = 1; m <= upto; ++m) {
    std::vector<Polynomial> products;
    std::function<void(size_t, long, Polynomial)> walk = [&](size_t idx, long left, Polynomial acc) {
      if (idx == which_t.size()) {
        if (left == 0) products.push_back(acc);
        return;
      }
      const long d = deg[which_t[idx]].first;
      for (;;) {
        walk(idx + 1, left, acc);
        if ((left -= d) < 0) break;
        acc = ctx.mul(acc, t[which_t[idx]]);
      }
    };
    walk(0, m, ctx.constant(1));
    size_t want = size_t(m) * (m + 1) / 2;
    if (products.empty() || ctx.rank(products) != want) return false;
  }
  return true;
}

}  // namespace strata
