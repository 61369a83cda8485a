#include "stratabench/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>

namespace strata {

namespace {

long block_degree(const Monomial& m, const WeightedRing& ring, size_t lo, size_t hi) {
  long d = 0;
  for (size_t i = lo; i < hi; ++i) d += static_cast<long>(m[i]) * ring.weights()[i];
  return d;
}

// Weighted grevlex on the variable range [lo, hi); 1, -1 or 0.
int compare_block(const Monomial& a, const Monomial& b, const WeightedRing& ring, size_t lo,
                  size_t hi) {
  long da = block_degree(a, ring, lo, hi), db = block_degree(b, ring, lo, hi);
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b, const WeightedRing& ring) const {
  size_t n = a.size();
  if (kind_ == Kind::WeightedGrevlex) return compare_block(a, b, ring, 0, n) > 0;
  int c = compare_block(a, b, ring, 0, split_);
  if (c != 0) return c > 0;
  return compare_block(a, b, ring, split_, n) > 0;
}

GbOptions GbOptions::from_env() {
  GbOptions o;
  if (const char* s = std::getenv("STRATABENCH_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) o.step_budget = static_cast<size_t>(v);
  }
  return o;
}

namespace {

using Terms = std::vector<Term>;

struct OrderCmp {
  const MonomialOrder* order;
  const WeightedRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b, *ring); }
};

Terms ordered_terms(const Polynomial& p, const MonomialOrder& order) {
  Terms t = p.terms();
  if (order.kind() == MonomialOrder::Kind::BlockElimination) {
    OrderCmp cmp{&order, p.ring().get()};
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return cmp(a.exps, b.exps); });
  }
  return t;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

void make_monic(Terms& t) {
  if (t.empty() || t[0].coeff == 1) return;
  Rational inv = 1 / t[0].coeff;
  for (auto& x : t) x.coeff *= inv;
}

// Full reduction of p modulo basis (each element sorted, monic). Terms
// of p need not be sorted.
Terms reduce(const Terms& p, const std::vector<const Terms*>& basis, const MonomialOrder& order,
             const WeightedRing& ring) {
  std::map<Monomial, Rational, OrderCmp> acc(OrderCmp{&order, &ring});
  for (const auto& t : p) {
    auto [it, fresh] = acc.emplace(t.exps, t.coeff);
    if (!fresh) {
      it->second += t.coeff;
      if (it->second == 0) acc.erase(it);
    }
  }
  Terms rem;
  while (!acc.empty()) {
    auto top = acc.begin();
    const Terms* red = nullptr;
    for (const Terms* g : basis)
      if (divides((*g)[0].exps, top->first)) {
        red = g;
        break;
      }
    if (!red) {
      rem.push_back({top->first, top->second});
      acc.erase(top);
      continue;
    }
    Monomial shift = quotient(top->first, (*red)[0].exps);
    Rational c = top->second / (*red)[0].coeff;
    acc.erase(top);
    for (size_t k = 1; k < red->size(); ++k) {
      Monomial m = (*red)[k].exps;
      for (size_t i = 0; i < m.size(); ++i) m[i] += shift[i];
      Rational v = -c * (*red)[k].coeff;
      auto [it, fresh] = acc.emplace(std::move(m), v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  return rem;
}

Terms spoly_terms(const Terms& f, const Terms& g) {
  Monomial l = lcm(f[0].exps, g[0].exps);
  Monomial sf = quotient(l, f[0].exps), sg = quotient(l, g[0].exps);
  Terms out;
  out.reserve(f.size() + g.size());
  Rational cf = 1 / f[0].coeff, cg = 1 / g[0].coeff;
  for (size_t k = 1; k < f.size(); ++k) {
    Monomial m = f[k].exps;
    for (size_t i = 0; i < m.size(); ++i) m[i] += sf[i];
    out.push_back({std::move(m), f[k].coeff * cf});
  }
  for (size_t k = 1; k < g.size(); ++k) {
    Monomial m = g[k].exps;
    for (size_t i = 0; i < m.size(); ++i) m[i] += sg[i];
    out.push_back({std::move(m), -g[k].coeff * cg});
  }
  return out;
}

const Ring& common_ring(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error("empty generator list");
  for (const auto& g : gens)
    if (!same_ring(g.ring(), gens[0].ring())) throw Error("generators live in different rings");
  return gens[0].ring();
}

}  // namespace

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading monomial of zero polynomial");
  if (order.kind() == MonomialOrder::Kind::WeightedGrevlex) return p.terms()[0].exps;
  const Monomial* best = &p.terms()[0].exps;
  for (const auto& t : p.terms())
    if (order.greater(t.exps, *best, *p.ring())) best = &t.exps;
  return *best;
}

Monomial GroebnerBasis::leading_monomial(size_t i) const {
  return strata::leading_monomial(gens_.at(i), order_);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GbOptions& options) {
  const Ring& ring = common_ring(gens);
  if (order.kind() == MonomialOrder::Kind::BlockElimination && order.split() > ring->size())
    throw Error("block split exceeds the number of variables");
  const WeightedRing& R = *ring;

  std::vector<Terms> G;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Terms t = ordered_terms(g, order);
    make_monic(t);
    G.push_back(std::move(t));
  }
  if (G.empty()) return GroebnerBasis(ring, order, {}, true);

  std::set<std::pair<size_t, size_t>> pending;
  for (size_t j = 0; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_key = [&](const std::pair<size_t, size_t>& p) {
    return lcm(G[p.first][0].exps, G[p.second][0].exps);
  };

  size_t steps = 0;
  while (!pending.empty()) {
    // Normal selection: smallest lcm in the order, then by indices.
    auto best = pending.begin();
    Monomial best_lcm = pair_key(*best);
    long best_deg = R.degree(best_lcm);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = pair_key(*it);
      long d = R.degree(l);
      if (d < best_deg || (d == best_deg && order.greater(best_lcm, l, R))) {
        best = it;
        best_lcm = std::move(l);
        best_deg = d;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    if (coprime(G[i][0].exps, G[j][0].exps)) continue;
    bool chain = false;
    for (size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(G[k][0].exps, best_lcm)) continue;
      auto ik = std::minmax(i, k), jk = std::minmax(j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) chain = true;
    }
    if (chain) continue;

    if (++steps > options.step_budget) throw Error("Groebner step budget exhausted");
    std::vector<const Terms*> basis;
    for (const auto& g : G) basis.push_back(&g);
    Terms h = reduce(spoly_terms(G[i], G[j]), basis, order, R);
    if (h.empty()) continue;
    make_monic(h);
    size_t n = G.size();
    G.push_back(std::move(h));
    for (size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimalize.
  std::vector<size_t> keep;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || !divides(G[k][0].exps, G[i][0].exps)) continue;
      if (G[k][0].exps != G[i][0].exps || k < i) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }
  // Interreduce tails.
  std::vector<Terms> reduced;
  for (size_t idx : keep) {
    std::vector<const Terms*> others;
    for (size_t k : keep)
      if (k != idx) others.push_back(&G[k]);
    Terms tail(G[idx].begin() + 1, G[idx].end());
    Terms r = reduce(tail, others, order, R);
    Terms full;
    full.push_back(G[idx][0]);
    full.insert(full.end(), r.begin(), r.end());
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Terms& a, const Terms& b) { return order.greater(b[0].exps, a[0].exps, R); });
  std::vector<Polynomial> out;
  for (auto& t : reduced) out.push_back(Polynomial::from_terms(ring, std::move(t)));
  return GroebnerBasis(ring, order, std::move(out), true);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_ring(p.ring(), gb.ring())) throw Error("polynomial and basis live in different rings");
  std::vector<Terms> G;
  for (const auto& g : gb.generators()) {
    Terms t = ordered_terms(g, gb.order());
    make_monic(t);
    G.push_back(std::move(t));
  }
  std::vector<const Terms*> basis;
  for (const auto& g : G) basis.push_back(&g);
  return Polynomial::from_terms(p.ring(), reduce(p.terms(), basis, gb.order(), *p.ring()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (!same_ring(f.ring(), g.ring())) throw Error("polynomials live in different rings");
  return Polynomial::from_terms(f.ring(), spoly_terms(ordered_terms(f, order), ordered_terms(g, order)));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& gens = gb.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!normal_form(s_polynomial(gens[i], gens[j], gb.order()), gb).is_zero()) return false;
  return true;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::set<std::string>& drop_vars, const GbOptions& options) {
  const Ring& ring = common_ring(gens);
  for (const auto& v : drop_vars) ring->index(v);
  if (drop_vars.size() >= ring->size()) throw Error("cannot eliminate every variable");

  std::vector<std::string> names, kept_names;
  std::vector<int> weights, kept_weights;
  for (size_t i = 0; i < ring->size(); ++i)
    if (drop_vars.count(ring->names()[i])) {
      names.push_back(ring->names()[i]);
      weights.push_back(ring->weights()[i]);
    }
  for (size_t i = 0; i < ring->size(); ++i)
    if (!drop_vars.count(ring->names()[i])) {
      names.push_back(ring->names()[i]);
      weights.push_back(ring->weights()[i]);
      kept_names.push_back(ring->names()[i]);
      kept_weights.push_back(ring->weights()[i]);
    }
  Ring work = WeightedRing::make(names, weights);
  Ring kept = WeightedRing::make(kept_names, kept_weights);

  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(change_ring(g, work));
  GroebnerBasis gb = buchberger(moved, MonomialOrder::block(drop_vars.size()), options);

  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool uses_dropped = false;
    for (const auto& t : g.terms())
      for (size_t i = 0; i < drop_vars.size(); ++i)
        if (t.exps[i]) uses_dropped = true;
    if (!uses_dropped) out.push_back(change_ring(g, kept));
  }
  return out;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g, const GbOptions& options) {
  if (f.is_zero() || g.is_zero()) throw Error("gcd of zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw Error("polynomials live in different rings");
  const Ring& ring = f.ring();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(ring, 1);

  std::string tag = "_tag";
  while (ring->find(tag)) tag += "_";
  std::vector<std::string> names = ring->names();
  std::vector<int> weights = ring->weights();
  names.push_back(tag);
  weights.push_back(1);
  Ring ext = WeightedRing::make(names, weights);
  Polynomial t = Polynomial::variable(ext, tag);
  Polynomial one = Polynomial::constant(ext, 1);
  Polynomial fe = change_ring(f, ext), ge = change_ring(g, ext);
  auto inter = eliminate({t * fe, (one - t) * ge}, {tag}, options);
  if (inter.size() != 1) throw Error("intersection of principal ideals is not principal");
  Polynomial l = change_ring(inter[0], ring);
  return divide_exact(f * g, l).monic();
}

bool projective_empty(const std::vector<Polynomial>& gens, const GbOptions& options) {
  const Ring& ring = common_ring(gens);
  for (int w : ring->weights())
    if (w != 1) throw Error("projective_empty needs an unweighted ring");
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!weighted_degree(g)) throw Error("projective_empty: inhomogeneous generator");
    nonzero.push_back(g);
  }
  if (nonzero.empty()) return false;
  GroebnerBasis gb = buchberger(nonzero, MonomialOrder::weighted_grevlex(), options);
  size_t n = ring->size();
  std::vector<bool> has_power(n, false);
  for (size_t k = 0; k < gb.generators().size(); ++k) {
    Monomial lm = gb.leading_monomial(k);
    size_t support = 0, var = 0;
    for (size_t i = 0; i < n; ++i)
      if (lm[i]) {
        ++support;
        var = i;
      }
    if (support == 0) return true;  // unit ideal
    if (support == 1) has_power[var] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, size_t v) {
  std::vector<std::vector<Term>> buckets(p.degree_in(v) + 1);
  for (const auto& t : p.terms()) {
    Term c = t;
    c.exps[v] = 0;
    buckets[t.exps[v]].push_back(std::move(c));
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.ring(), std::move(b)));
  return out;
}

Polynomial determinant(PolyMatrix m, const Ring& ring) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  if (n == 0) return Polynomial::constant(ring, 1);
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Polynomial(ring);
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Polynomial v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = v.is_zero() ? v : divide_exact(v, prev);
      }
      m[i][k] = Polynomial(ring);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Polynomial sylvester_resultant(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g,
                               const Ring& ring) {
  if (f.size() < 2 || g.size() < 2) throw Error("resultant needs positive degree");
  size_t m = f.size() - 1, n = g.size() - 1, N = m + n;
  PolyMatrix S(N, PolyVector(N, Polynomial(ring)));
  for (size_t r = 0; r < n; ++r)
    for (size_t k = 0; k <= m; ++k) S[r][r + k] = f[m - k];
  for (size_t r = 0; r < m; ++r)
    for (size_t k = 0; k <= n; ++k) S[n + r][r + k] = g[n - k];
  return determinant(std::move(S), ring);
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, std::string_view v) {
  if (!same_ring(f.ring(), g.ring())) throw Error("polynomials live in different rings");
  size_t idx = f.ring()->index(v);
  if (f.degree_in(idx) == 0 || g.degree_in(idx) == 0)
    throw Error("resultant: input has degree 0 in " + std::string(v));
  return sylvester_resultant(coefficients_in(f, idx), coefficients_in(g, idx), f.ring());
}

}  // namespace strata
