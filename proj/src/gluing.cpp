#include "stratabench/gluing.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "stratabench/polynomial.hpp"

namespace strata {

namespace {

// Index-based view of a validated configuration.
struct Layout {
  std::vector<std::string> marks;
  std::map<std::string, size_t> id;
  std::vector<size_t> comp;     // component of each mark
  std::vector<size_t> partner;  // other preimage of the same node
  std::vector<size_t> node;     // index into matching
  std::vector<size_t> comp_order, comp_pos;
  std::vector<size_t> mark_order, mark_pos;
};

Layout layout(const MarkedConfig& c) {
  c.validate();
  Layout L;
  for (size_t i = 0; i < c.components.size(); ++i)
    for (const auto& m : c.components[i].marks) {
      L.id[m] = L.marks.size();
      L.marks.push_back(m);
      L.comp.push_back(i);
    }
  L.partner.assign(L.marks.size(), 0);
  L.node.assign(L.marks.size(), 0);
  for (size_t k = 0; k < c.matching.size(); ++k) {
    size_t a = L.id.at(c.matching[k].first), b = L.id.at(c.matching[k].second);
    L.partner[a] = b;
    L.partner[b] = a;
    L.node[a] = L.node[b] = k;
  }
  L.comp_order.resize(c.components.size());
  std::iota(L.comp_order.begin(), L.comp_order.end(), 0);
  std::stable_sort(L.comp_order.begin(), L.comp_order.end(), [&](size_t a, size_t b) {
    const auto &x = c.components[a], &y = c.components[b];
    return std::make_pair(x.genus, x.marks.size()) < std::make_pair(y.genus, y.marks.size());
  });
  L.comp_pos.resize(c.components.size());
  for (size_t p = 0; p < L.comp_order.size(); ++p) L.comp_pos[L.comp_order[p]] = p;
  for (size_t ci : L.comp_order)
    for (const auto& m : c.components[ci].marks) L.mark_order.push_back(L.id.at(m));
  L.mark_pos.resize(L.marks.size());
  for (size_t p = 0; p < L.mark_order.size(); ++p) L.mark_pos[L.mark_order[p]] = p;
  return L;
}

struct Inv {
  std::vector<size_t> comp, mark;
  std::vector<int> rho;
};

Inv to_internal(const MarkedConfig& c, const Layout& L, const GluingInvolution& g) {
  validate_involution(c, g);
  Inv t{g.component_map, std::vector<size_t>(L.marks.size()), g.fixed_point_counts};
  for (size_t i = 0; i < L.marks.size(); ++i) t.mark[i] = L.id.at(g.mark_map.at(L.marks[i]));
  return t;
}

GluingInvolution to_public(const Layout& L, const Inv& t) {
  GluingInvolution g{t.comp, {}, t.rho};
  for (size_t i = 0; i < L.marks.size(); ++i) g.mark_map[L.marks[i]] = L.marks[t.mark[i]];
  return g;
}

size_t find(std::vector<size_t>& parent, size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

CuspPartition classes_of(const MarkedConfig& c, const Layout& L, const Inv& t) {
  std::vector<size_t> parent(L.marks.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](size_t a, size_t b) { parent[find(parent, a)] = find(parent, b); };
  for (size_t i = 0; i < L.marks.size(); ++i) {
    unite(i, L.partner[i]);
    unite(i, t.mark[i]);
  }
  std::map<size_t, std::vector<size_t>> by_root;
  for (size_t k = 0; k < c.matching.size(); ++k) by_root[find(parent, L.id.at(c.matching[k].first))].push_back(k);
  CuspPartition out;
  for (auto& [root, nodes] : by_root) out.push_back(std::move(nodes));
  std::sort(out.begin(), out.end());
  return out;
}

ChiCheck chi_of(const MarkedConfig& c, const Layout& L, const Inv& t) {
  ChiCheck r{};
  r.mu_bar = c.nodes();
  for (const auto& comp : c.components) r.chi_bar += 1 - comp.genus;
  r.chi_bar -= r.mu_bar;
  r.rho = std::accumulate(t.rho.begin(), t.rho.end(), 0L);
  r.mu1 = static_cast<long>(classes_of(c, L, t).size());
  r.chi_D = make_rational(r.chi_bar - r.mu_bar, 2) + make_rational(r.rho, 4) + r.mu1;
  r.relation_holds = 2 * r.mu_bar == r.rho + 4 * r.mu1;
  r.holds = r.chi_D == -1;
  return r;
}

bool descends(const Layout& L, const Inv& t) {
  if (std::accumulate(t.rho.begin(), t.rho.end(), 0) != 0) return false;
  for (size_t i = 0; i < L.marks.size(); ++i)
    if (L.partner[t.mark[i]] != t.mark[L.partner[i]]) return false;
  return true;
}

// Fixed-point-free perfect matchings of `items`.
void pairings(std::vector<size_t> items, std::vector<std::vector<std::pair<size_t, size_t>>>& out,
              std::vector<std::pair<size_t, size_t>>& cur) {
  if (items.empty()) {
    out.push_back(cur);
    return;
  }
  size_t a = items[0];
  for (size_t j = 1; j < items.size(); ++j) {
    std::vector<size_t> rest;
    for (size_t k = 1; k < items.size(); ++k)
      if (k != j) rest.push_back(items[k]);
    cur.emplace_back(a, items[j]);
    pairings(rest, out, cur);
    cur.pop_back();
  }
}

std::vector<Inv> enumerate_internal(const MarkedConfig& c, const Layout& L) {
  size_t n = c.components.size();
  std::vector<std::vector<size_t>> comp_marks(n);
  for (size_t i = 0; i < L.marks.size(); ++i) comp_marks[L.comp[i]].push_back(i);

  // Involutions of the component set preserving genus and mark count.
  std::vector<std::vector<size_t>> comp_maps;
  std::vector<size_t> cm(n, SIZE_MAX);
  std::function<void()> rec_comp = [&]() {
    size_t c0 = 0;
    while (c0 < n && cm[c0] != SIZE_MAX) ++c0;
    if (c0 == n) {
      comp_maps.push_back(cm);
      return;
    }
    cm[c0] = c0;
    rec_comp();
    for (size_t d = c0 + 1; d < n; ++d) {
      if (cm[d] != SIZE_MAX || c.components[d].genus != c.components[c0].genus ||
          comp_marks[d].size() != comp_marks[c0].size())
        continue;
      cm[c0] = d;
      cm[d] = c0;
      rec_comp();
      cm[d] = SIZE_MAX;
    }
    cm[c0] = SIZE_MAX;
  };
  rec_comp();

  std::vector<Inv> out;
  for (const auto& map : comp_maps) {
    // Per orbit of the component map, the list of local choices.
    struct Choice {
      std::vector<std::pair<size_t, size_t>> pairs;
      size_t comp;
      int rho;
    };
    std::vector<std::vector<Choice>> blocks;
    bool dead = false;
    for (size_t ci = 0; ci < n && !dead; ++ci) {
      if (map[ci] < ci) continue;
      std::vector<Choice> opts;
      if (map[ci] == ci) {
        std::vector<std::vector<std::pair<size_t, size_t>>> ps;
        std::vector<std::pair<size_t, size_t>> cur;
        if (comp_marks[ci].size() % 2 == 0) pairings(comp_marks[ci], ps, cur);
        for (const auto& p : ps)
          for (int rho : admissible_fixed_point_counts(c.components[ci].genus)) opts.push_back({p, ci, rho});
      } else {
        std::vector<size_t> target = comp_marks[map[ci]];
        do {
          Choice ch{{}, ci, 0};
          for (size_t k = 0; k < target.size(); ++k) ch.pairs.emplace_back(comp_marks[ci][k], target[k]);
          opts.push_back(std::move(ch));
        } while (std::next_permutation(target.begin(), target.end()));
      }
      if (opts.empty()) dead = true;
      blocks.push_back(std::move(opts));
    }
    if (dead) continue;
    Inv t{map, std::vector<size_t>(L.marks.size()), std::vector<int>(n, 0)};
    std::function<void(size_t)> rec = [&](size_t b) {
      if (b == blocks.size()) {
        out.push_back(t);
        return;
      }
      for (const auto& ch : blocks[b]) {
        for (auto [x, y] : ch.pairs) {
          t.mark[x] = y;
          t.mark[y] = x;
        }
        t.rho[ch.comp] = ch.rho;
        rec(b + 1);
      }
      t.rho[blocks[b].front().comp] = 0;
    };
    rec(0);
  }
  return out;
}

using Perm = std::vector<size_t>;

Perm to_perm(const MarkedConfig& c, const Layout& L, const MarkPermutation& g) {
  Perm p(L.marks.size());
  std::iota(p.begin(), p.end(), 0);
  for (const auto& [from, to] : g) {
    auto a = L.id.find(from), b = L.id.find(to);
    if (a == L.id.end() || b == L.id.end()) throw Error("symmetry mentions unknown mark '" + from + "' or '" + to + "'");
    p[a->second] = b->second;
  }
  std::vector<bool> hit(p.size());
  for (size_t x : p) hit[x] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw Error("symmetry is not a permutation of the marks");
  for (size_t i = 0; i < p.size(); ++i) {
    if (L.partner[p[i]] != p[L.partner[i]]) throw Error("symmetry does not preserve the matching");
    size_t a = L.comp[i], b = L.comp[p[i]];
    if (c.components[a].genus != c.components[b].genus ||
        c.components[a].marks.size() != c.components[b].marks.size())
      throw Error("symmetry does not preserve components");
    for (size_t j = 0; j < p.size(); ++j)
      if (L.comp[j] == a && L.comp[p[j]] != b) throw Error("symmetry splits a component");
  }
  return p;
}

std::vector<size_t> induced_components(const MarkedConfig& c, const Layout& L, const Perm& g) {
  std::vector<size_t> m(c.components.size());
  std::iota(m.begin(), m.end(), 0);
  for (size_t i = 0; i < g.size(); ++i) m[L.comp[i]] = L.comp[g[i]];
  return m;
}

Inv conjugate_internal(const MarkedConfig& c, const Layout& L, const Perm& g, const Inv& t) {
  std::vector<size_t> gc = induced_components(c, L, g);
  Inv r{std::vector<size_t>(t.comp.size()), std::vector<size_t>(t.mark.size()), std::vector<int>(t.rho.size())};
  for (size_t i = 0; i < t.mark.size(); ++i) r.mark[g[i]] = g[t.mark[i]];
  for (size_t ci = 0; ci < t.comp.size(); ++ci) {
    r.comp[gc[ci]] = gc[t.comp[ci]];
    r.rho[gc[ci]] = t.rho[ci];
  }
  return r;
}

std::vector<long> key_of(const Layout& L, const Inv& t) {
  std::vector<long> k;
  for (size_t m : L.mark_order) k.push_back(static_cast<long>(L.mark_pos[t.mark[m]]));
  for (size_t ci : L.comp_order) {
    k.push_back(static_cast<long>(L.comp_pos[t.comp[ci]]));
    k.push_back(t.rho[ci]);
  }
  return k;
}

std::vector<Perm> group_closure(const MarkedConfig& c, const Layout& L, const std::vector<MarkPermutation>& gens) {
  std::vector<Perm> g;
  for (const auto& m : gens) g.push_back(to_perm(c, L, m));
  Perm id(L.marks.size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (size_t q = 0; q < queue.size(); ++q)
    for (const auto& s : g) {
      Perm next(id.size());
      for (size_t i = 0; i < id.size(); ++i) next[i] = s[queue[q][i]];
      if (seen.insert(next).second) queue.push_back(next);
    }
  return queue;
}

Inv canonical_internal(const MarkedConfig& c, const Layout& L, const std::vector<Perm>& group, const Inv& t) {
  Inv best = t;
  std::vector<long> best_key = key_of(L, t);
  for (const auto& g : group) {
    Inv r = conjugate_internal(c, L, g, t);
    auto k = key_of(L, r);
    if (k < best_key) {
      best_key = std::move(k);
      best = std::move(r);
    }
  }
  return best;
}

}  // namespace

void MarkedConfig::validate() const {
  std::set<std::string> seen;
  for (const auto& comp : components) {
    if (comp.genus < 0) throw Error("component genus must be non-negative");
    for (const auto& m : comp.marks)
      if (!seen.insert(m).second) throw Error("mark '" + m + "' appears twice");
  }
  std::set<std::string> matched;
  for (const auto& [a, b] : matching) {
    for (const auto& m : {a, b}) {
      if (!seen.count(m)) throw Error("matching mentions unknown mark '" + m + "'");
      if (!matched.insert(m).second) throw Error("mark '" + m + "' is matched twice");
    }
    if (a == b) throw Error("mark '" + a + "' matched with itself");
  }
  if (matched.size() != seen.size()) throw Error("every mark must be matched");
}

std::vector<int> admissible_fixed_point_counts(int genus) {
  if (genus < 0) throw Error("genus must be non-negative");
  std::vector<int> out;
  for (int h = 0; 2 * genus + 2 - 4 * h >= 0; ++h) out.push_back(2 * genus + 2 - 4 * h);
  return out;
}

void validate_involution(const MarkedConfig& c, const GluingInvolution& g) {
  c.validate();
  size_t n = c.components.size();
  if (g.component_map.size() != n || g.fixed_point_counts.size() != n)
    throw Error("involution must list every component");
  std::map<std::string, size_t> comp_of;
  for (size_t i = 0; i < n; ++i)
    for (const auto& m : c.components[i].marks) comp_of[m] = i;
  for (size_t i = 0; i < n; ++i) {
    size_t j = g.component_map[i];
    if (j >= n || g.component_map[j] != i) throw Error("component map is not an involution");
    if (c.components[i].genus != c.components[j].genus ||
        c.components[i].marks.size() != c.components[j].marks.size())
      throw Error("component map must preserve genus and mark count");
    int rho = g.fixed_point_counts[i];
    if (i != j && rho != 0) throw Error("swapped components have no fixed points");
    if (i == j) {
      auto ok = admissible_fixed_point_counts(c.components[i].genus);
      if (std::find(ok.begin(), ok.end(), rho) == ok.end())
        throw Error("inadmissible fixed point count " + std::to_string(rho) + " on a genus " +
                    std::to_string(c.components[i].genus) + " component");
    }
  }
  if (g.mark_map.size() != comp_of.size()) throw Error("involution must map every mark");
  for (const auto& [a, b] : g.mark_map) {
    auto ia = comp_of.find(a), ib = comp_of.find(b);
    if (ia == comp_of.end() || ib == comp_of.end()) throw Error("involution mentions unknown mark");
    if (a == b) throw Error("mark '" + a + "' is fixed (Gorenstein condition)");
    if (g.mark_map.at(b) != a) throw Error("mark map is not an involution");
    if (g.component_map[ia->second] != ib->second) throw Error("mark map incompatible with component map");
  }
}

CuspPartition cusp_classes(const MarkedConfig& c, const GluingInvolution& inv) {
  Layout L = layout(c);
  return classes_of(c, L, to_internal(c, L, inv));
}

ChiCheck chi_check(const MarkedConfig& c, const GluingInvolution& inv) {
  Layout L = layout(c);
  return chi_of(c, L, to_internal(c, L, inv));
}

bool descends_etale(const MarkedConfig& c, const GluingInvolution& inv) {
  Layout L = layout(c);
  return descends(L, to_internal(c, L, inv));
}

std::string feasibility(const MarkedConfig& c, const GluingInvolution& inv) {
  return descends_etale(c, inv) ? "excluded-etale-quotient" : "feasible";
}

std::vector<GluingInvolution> gorenstein_involutions(const MarkedConfig& c) {
  Layout L = layout(c);
  std::vector<GluingInvolution> out;
  for (const auto& t : enumerate_internal(c, L)) out.push_back(to_public(L, t));
  return out;
}

GluingInvolution conjugate(const MarkedConfig& c, const MarkPermutation& g, const GluingInvolution& inv) {
  Layout L = layout(c);
  return to_public(L, conjugate_internal(c, L, to_perm(c, L, g), to_internal(c, L, inv)));
}

GluingInvolution canonical_form(const MarkedConfig& c, const std::vector<MarkPermutation>& symmetry,
                                const GluingInvolution& inv) {
  Layout L = layout(c);
  return to_public(L, canonical_internal(c, L, group_closure(c, L, symmetry), to_internal(c, L, inv)));
}

GluingEnumeration enumerate_gluings(const MarkedConfig& c, const std::vector<MarkPermutation>& symmetry) {
  Layout L = layout(c);
  auto group = group_closure(c, L, symmetry);
  GluingEnumeration e;
  std::map<std::vector<long>, std::pair<Inv, size_t>> orbits;
  for (const auto& t : enumerate_internal(c, L)) {
    ++e.candidates;
    if (!chi_of(c, L, t).holds) continue;
    ++e.passing;
    Inv canon = canonical_internal(c, L, group, t);
    auto [it, fresh] = orbits.try_emplace(key_of(L, canon), canon, 0);
    it->second.second++;
  }
  for (const auto& [key, entry] : orbits) {
    const Inv& t = entry.first;
    e.orbits.push_back({to_public(L, t), classes_of(c, L, t), chi_of(c, L, t),
                        descends(L, t) ? "excluded-etale-quotient" : "feasible", entry.second});
  }
  return e;
}

QuarticCase quartic_case_table(long k, QuarticFlags flags) {
  if (k < 0) throw Error("node count must be non-negative");
  if (k > 6) throw Error("exceeds quartic bound");
  QuarticCase q{k, false, "", true};
  switch (k) {
    case 0:
    case 1:
    case 2:
      q.description = "irreducible";
      break;
    case 3:
      q.reducible = flags.collinear_triple;
      q.description = q.reducible ? "smooth cubic and a general line" : "irreducible";
      break;
    case 4:
      q.reducible = true;
      q.description = "two smooth conics or a nodal cubic and a line";
      break;
    case 5:
      q.reducible = true;
      q.description = "smooth conic and two general lines";
      break;
    case 6:
      q.reducible = true;
      q.description = "four lines in general position";
      break;
  }
  if (flags.irreducible && q.reducible) q.flags_consistent = false;
  return q;
}

namespace {

MarkedConfig nodal_curve(int genus, long nodes) {
  MarkedConfig c{{{genus, {}}}, {}};
  for (long k = 0; k < nodes; ++k) {
    std::string a = "N" + std::to_string(k + 1) + "a", b = "N" + std::to_string(k + 1) + "b";
    c.components[0].marks.push_back(a);
    c.components[0].marks.push_back(b);
    c.matching.emplace_back(a, b);
  }
  return c;
}

}  // namespace

MinimumNodesReport minimum_nodes_report() {
  // Irreducible plane quartics with mu_bar nodes: geometric genus 3 - mu_bar.
  MinimumNodesReport rep{{}, -1};
  for (long mu = 0; mu <= 3; ++mu) {
    MarkedConfig c = nodal_curve(static_cast<int>(3 - mu), mu);
    Layout L = layout(c);
    std::array<size_t, 3> n{0, 0, 0};
    for (const auto& t : enumerate_internal(c, L)) {
      ++n[0];
      if (!chi_of(c, L, t).holds) continue;
      ++n[1];
      if (!descends(L, t)) ++n[2];
    }
    rep.counts.push_back(n);
    if (rep.minimum < 0 && n[2] > 0) rep.minimum = mu;
  }
  return rep;
}

long minimum_nodes_check() { return minimum_nodes_report().minimum; }

const std::vector<std::string>& builtin_config_names() {
  static const std::vector<std::string> names{"four-lines", "conic-two-lines", "two-conics", "cubic-line",
                                              "three-nodal"};
  return names;
}

namespace {

// Relabel index-named marks by a permutation of {1..n} (0-based vector).
using IndexPerm = std::vector<int>;

NamedConfig four_lines() {
  NamedConfig nc;
  auto P = [](int i, int j) { return "P" + std::to_string(i) + std::to_string(j); };
  for (int i = 1; i <= 4; ++i) {
    MarkedComponent comp{0, {}};
    for (int j = 1; j <= 4; ++j)
      if (j != i) comp.marks.push_back(P(i, j));
    nc.config.components.push_back(comp);
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) nc.config.matching.emplace_back(P(i, j), P(j, i));
  for (const IndexPerm& s : {IndexPerm{2, 1, 3, 4}, IndexPerm{2, 3, 4, 1}}) {
    MarkPermutation g;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (i != j) g[P(i, j)] = P(s[i - 1], s[j - 1]);
    nc.symmetry.push_back(g);
  }
  return nc;
}

NamedConfig two_conics() {
  NamedConfig nc;
  auto Q = [](int i, char side) { return "Q" + std::to_string(i) + side; };
  for (char side : {'a', 'b'}) {
    MarkedComponent comp{0, {}};
    for (int i = 1; i <= 4; ++i) comp.marks.push_back(Q(i, side));
    nc.config.components.push_back(comp);
  }
  for (int i = 1; i <= 4; ++i) nc.config.matching.emplace_back(Q(i, 'a'), Q(i, 'b'));
  for (const IndexPerm& s : {IndexPerm{2, 1, 3, 4}, IndexPerm{2, 3, 4, 1}}) {
    MarkPermutation g;
    for (int i = 1; i <= 4; ++i)
      for (char side : {'a', 'b'}) g[Q(i, side)] = Q(s[i - 1], side);
    nc.symmetry.push_back(g);
  }
  MarkPermutation swap;
  for (int i = 1; i <= 4; ++i) {
    swap[Q(i, 'a')] = Q(i, 'b');
    swap[Q(i, 'b')] = Q(i, 'a');
  }
  nc.symmetry.push_back(swap);
  return nc;
}

NamedConfig conic_two_lines() {
  // Lines L1, L2 meet in P; L1 meets the conic in Q, R and L2 in S, T.
  NamedConfig nc;
  nc.config.components = {{0, {"P1", "Q1", "R1"}}, {0, {"P2", "S2", "T2"}}, {0, {"Q3", "R3", "S3", "T3"}}};
  nc.config.matching = {{"P1", "P2"}, {"Q1", "Q3"}, {"R1", "R3"}, {"S2", "S3"}, {"T2", "T3"}};
  nc.symmetry = {
      {{"P1", "P2"}, {"P2", "P1"}, {"Q1", "S2"}, {"S2", "Q1"}, {"R1", "T2"}, {"T2", "R1"},
       {"Q3", "S3"}, {"S3", "Q3"}, {"R3", "T3"}, {"T3", "R3"}},
      {{"Q1", "R1"}, {"R1", "Q1"}, {"Q3", "R3"}, {"R3", "Q3"}},
  };
  return nc;
}

NamedConfig cubic_line() {
  NamedConfig nc;
  nc.config.components = {{0, {"L1", "L2", "L3"}}, {1, {"C1", "C2", "C3"}}};
  nc.config.matching = {{"L1", "C1"}, {"L2", "C2"}, {"L3", "C3"}};
  nc.symmetry = {
      {{"L1", "L2"}, {"L2", "L1"}, {"C1", "C2"}, {"C2", "C1"}},
      {{"L1", "L2"}, {"L2", "L3"}, {"L3", "L1"}, {"C1", "C2"}, {"C2", "C3"}, {"C3", "C1"}},
  };
  return nc;
}

NamedConfig three_nodal() {
  NamedConfig nc{nodal_curve(0, 3), {}};
  nc.symmetry = {
      {{"N1a", "N2a"}, {"N2a", "N1a"}, {"N1b", "N2b"}, {"N2b", "N1b"}},
      {{"N1a", "N2a"}, {"N2a", "N3a"}, {"N3a", "N1a"}, {"N1b", "N2b"}, {"N2b", "N3b"}, {"N3b", "N1b"}},
      {{"N1a", "N1b"}, {"N1b", "N1a"}},
  };
  return nc;
}

}  // namespace

NamedConfig builtin_config(const std::string& name) {
  if (name == "four-lines") return four_lines();
  if (name == "conic-two-lines") return conic_two_lines();
  if (name == "two-conics") return two_conics();
  if (name == "cubic-line") return cubic_line();
  if (name == "three-nodal") return three_nodal();
  throw Error("unknown configuration '" + name + "'");
}

MarkedConfig config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j.contains("matching"))
    throw Error("configuration needs \"components\" and \"matching\"");
  MarkedConfig c;
  for (const auto& comp : j.at("components")) {
    MarkedComponent m;
    m.genus = comp.at("genus").get<int>();
    m.marks = comp.at("marks").get<std::vector<std::string>>();
    c.components.push_back(std::move(m));
  }
  for (const auto& pair : j.at("matching")) {
    auto v = pair.get<std::vector<std::string>>();
    if (v.size() != 2) throw Error("matching entries must be pairs");
    c.matching.emplace_back(v[0], v[1]);
  }
  c.validate();
  return c;
}

std::vector<MarkPermutation> symmetry_from_json(const json& j) {
  std::vector<MarkPermutation> out;
  if (!j.contains("symmetry")) return out;
  for (const auto& g : j.at("symmetry")) out.push_back(g.get<MarkPermutation>());
  return out;
}

json to_json(const MarkedConfig& c) {
  json comps = json::array();
  for (const auto& comp : c.components) comps.push_back({{"genus", comp.genus}, {"marks", comp.marks}});
  json matching = json::array();
  for (const auto& [a, b] : c.matching) matching.push_back({a, b});
  return {{"components", comps}, {"matching", matching}};
}

namespace {

json partition_json(const MarkedConfig& c, const CuspPartition& p) {
  json out = json::array();
  for (const auto& cls : p) {
    json names = json::array();
    for (size_t k : cls) names.push_back(c.matching[k].first + "~" + c.matching[k].second);
    out.push_back(names);
  }
  return out;
}

json chi_json(const ChiCheck& r) {
  return {{"chi_bar", r.chi_bar}, {"mu_bar", r.mu_bar}, {"rho", r.rho},           {"mu1", r.mu1},
          {"chi_D", to_string(r.chi_D)}, {"relation_holds", r.relation_holds}, {"holds", r.holds}};
}

}  // namespace

json to_json(const MarkedConfig& c, const GluingInvolution& inv) {
  json j{{"component_map", inv.component_map}, {"mark_map", inv.mark_map},
         {"fixed_point_counts", inv.fixed_point_counts}};
  j["cusp_classes"] = partition_json(c, cusp_classes(c, inv));
  return j;
}

json to_json(const MarkedConfig& c, const GluingEnumeration& e) {
  json orbits = json::array();
  for (const auto& o : e.orbits) {
    std::vector<size_t> sizes;
    for (const auto& cls : o.cusps) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    orbits.push_back({{"involution", to_json(c, o.representative)},
                      {"cusp_sizes", sizes},
                      {"chi", chi_json(o.chi)},
                      {"feasibility", o.feasibility},
                      {"size", o.size}});
  }
  return {{"candidates", e.candidates}, {"passing", e.passing}, {"orbits", orbits}};
}

}  // namespace strata
