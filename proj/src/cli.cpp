#include "stratabench/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "stratabench/bidouble.hpp"
#include "stratabench/fibration.hpp"
#include "stratabench/gluing.hpp"
#include "stratabench/graded_models.hpp"
#include "stratabench/ideal.hpp"
#include "stratabench/implicitize.hpp"
#include "stratabench/s2e.hpp"

namespace strata {

namespace {

constexpr const char* kVersion = "1.0.0";

// Runs f, turning domain and parse errors into usage errors.
template <class F>
auto input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Rational rational_flag(const std::string& text, const std::string& flag) {
  return input([&] {
    try {
      return parse_rational(text);
    } catch (const std::exception&) {
      throw UsageError(flag + ": not a rational number: '" + text + "'");
    }
  });
}

template <class T>
std::vector<T> int_list(const std::string& text, const std::string& flag) {
  std::vector<T> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

// {"name":..., "ok":...} rows plus overall verdict.
struct Checks {
  json rows = json::array();
  bool all = true;
  void add(const std::string& name, bool ok) {
    rows.push_back({{"name", name}, {"ok", ok}});
    all = all && ok;
  }
  // Exceptions count as failures.
  void run(const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      rows.push_back({{"name", name}, {"ok", false}, {"error", e.what()}});
      all = false;
      return;
    }
    add(name, ok);
  }
};

json verdict(bool ok) { return ok ? "pass" : "fail"; }

json selftest_report(const std::string& command, const Checks& c) {
  return {{"command", command + " selftest"}, {"verdict", verdict(c.all)}, {"checks", c.rows}};
}

json point_json(const ProjectivePoint& p) { return to_string(p); }

json rational_json(const Rational& q) { return to_string(q); }

// ---------------------------------------------------------------- hilbert

bool hilbert_matches_rr(int upto) {
  auto h = ci_hilbert_series({1, 2, 2, 3, 3}, {6, 6}, upto);
  for (int m = 1; m <= upto; ++m)
    if (h.coefficients[m] != rr_prediction(1, 2, 1, m)) return false;
  return true;
}

Checks hilbert_selftest() {
  Checks c;
  c.run("complete intersection (6,6) in P(1,2,2,3,3) agrees with Riemann-Roch", [] { return hilbert_matches_rr(12); });
  c.run("C[1,1,2,3]/(6) gives m(m+1)/2 + 1", [] {
    auto h = ci_hilbert_series({1, 1, 2, 3}, {6}, 8);
    for (long m = 1; m <= 8; ++m)
      if (h.coefficients[m] != m * (m + 1) / 2 + 1) return false;
    return true;
  });
  c.run("C[1,1,3]/(6) gives 2m - 1", [] {
    auto h = ci_hilbert_series({1, 1, 3}, {6}, 8);
    for (long m = 2; m <= 8; ++m)
      if (h.coefficients[m] != 2 * m - 1) return false;
    return true;
  });
  c.run("weighted projective plane P(1,1,1) has (m+1)(m+2)/2", [] {
    auto h = ci_hilbert_series({1, 1, 1}, {}, 6);
    for (long m = 0; m <= 6; ++m)
      if (h.coefficients[m] != (m + 1) * (m + 2) / 2) return false;
    return true;
  });
  return c;
}

// ---------------------------------------------------------------- canring

CanonicalRingModel canring_model(const std::string& source, unsigned long seed) {
  if (source == "random") {
    std::mt19937_64 rng(seed);
    return random_canonical_ring_model(rng);
  }
  json j = load_json_file(source);
  return input([&] {
    const Ring& R = canonical_ring();
    for (const char* k : {"a1", "a2", "b1", "b2"})
      if (!j.contains(k)) throw UsageError(std::string("model: missing field '") + k + "'");
    return CanonicalRingModel{polynomial_from_json(j["a1"], R), polynomial_from_json(j["a2"], R),
                              polynomial_from_json(j["b1"], R), polynomial_from_json(j["b2"], R)};
  });
}

json model_json(const CanonicalRingModel& m) {
  return {{"a1", to_string(m.a1)}, {"a2", to_string(m.a2)}, {"b1", to_string(m.b1)}, {"b2", to_string(m.b2)}};
}

// Up to 1 + resamples random base points with u0 != 0.
json fibre_counts(const CanonicalRingModel& m, int points, int resamples, std::mt19937_64& rng, bool& all_four) {
  std::uniform_int_distribution<int> c(-20, 20), pos(1, 20);
  json out = json::array();
  all_four = true;
  for (int i = 0; i < points; ++i) {
    json attempts = json::array();
    int count = -1;
    for (int a = 0; a <= resamples && count != 4; ++a) {
      ProjectivePoint p{Rational(pos(rng)), Rational(c(rng)), Rational(c(rng))};
      try {
        count = bicanonical_fiber_count(m, p);
        attempts.push_back({{"point", point_json(p)}, {"count", count}});
      } catch (const Error& e) {
        count = -1;
        attempts.push_back({{"point", point_json(p)}, {"error", e.what()}});
      }
    }
    all_four = all_four && count == 4;
    out.push_back({{"final_count", count}, {"attempts", attempts}});
  }
  return out;
}

Checks canring_selftest() {
  Checks c;
  const Ring& R = canonical_ring();
  auto C = [&](const char* s) { return parse_polynomial(s, R); };
  CanonicalRingModel diagonal{C("0"), C("0"), C("y1^3 + x^6"), C("y2^3 + x^6")};
  c.run("diagonal model validates", [&] { return validate_canring(diagonal).ok(); });
  c.run("diagonal model has (Z/2)^2", [&] {
    return classify_relative_automorphisms(diagonal) == RelativeAutomorphisms::Z2xZ2;
  });
  c.run("common factor in b1, b2 is rejected", [&] {
    return !validate_canring({C("0"), C("0"), C("y1^3 + x^6"), C("y1^3 + x^6")}).coprime;
  });
  c.run("random models are quadruple covers", [] {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2; ++i) {
      auto m = random_canonical_ring_model(rng);
      bool four = false;
      fibre_counts(m, 2, 3, rng, four);
      if (!four) return false;
    }
    return true;
  });
  c.run("del Pezzo report", [] {
    const Ring& D = del_pezzo_ring();
    DelPezzoModel m{1, parse_polynomial("x1^2", D), parse_polynomial("x1^4 + x2^4", D),
                    elliptic_involution_a6(1, 2, 3)};
    auto rep = del_pezzo_report(m, 8);
    return rep.anticanonical_matches && rep.restricted_matches;
  });
  return c;
}

// ---------------------------------------------------------------- bidouble

BuildingData building_data(const std::string& source) {
  const auto& names = known_example_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) return known_examples(source);
  json j = load_json_file(source);
  return input([&] {
    const Ring& R = plane_ring();
    for (const char* k : {"D0", "D1", "D2"})
      if (!j.contains(k)) throw UsageError(std::string("building data: missing field '") + k + "'");
    return BuildingData{polynomial_from_json(j["D0"], R), polynomial_from_json(j["D1"], R),
                        polynomial_from_json(j["D2"], R)};
  });
}

json classification_json(const PointClassification& c) {
  json j = {{"class", to_string(c.tag)},
            {"multiplicities", std::vector<unsigned>(c.multiplicities.begin(), c.multiplicities.end())}};
  if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
  return j;
}

DivisorMultiset multiset_from_json(const json& j) {
  return input([&] {
    DivisorMultiset d;
    for (int i = 0; i < 3; ++i) {
      std::string key = "D" + std::to_string(i);
      if (!j.contains(key)) continue;
      for (const auto& entry : j.at(key)) {
        if (!entry.is_array() || entry.size() != 2) throw UsageError(key + ": entries must be [label, multiplicity]");
        d.lists[i].emplace_back(entry[0].get<std::string>(), entry[1].get<long>());
      }
    }
    return d;
  });
}

json multiset_json(const DivisorMultiset& d) {
  json j;
  for (int i = 0; i < 3; ++i) {
    json list = json::array();
    for (const auto& [label, m] : d.lists[i]) list.push_back({label, m});
    j["D" + std::to_string(i)] = list;
  }
  return j;
}

json example_json(const std::string& name, bool& ok) {
  BuildingData bd = known_examples(name);
  auto v = validate_building_data(bd);
  json pts = json::array();
  ok = v.ok();
  for (const auto& [p, want] : known_example_points(name)) {
    auto got = classify_point(bd, p);
    ok = ok && got.tag == want;
    json row = classification_json(got);
    row["point"] = point_json(p);
    row["expected"] = to_string(want);
    pts.push_back(row);
  }
  return {{"name", name},
          {"D0", to_string(bd.D0)},
          {"D1", to_string(bd.D1)},
          {"D2", to_string(bd.D2)},
          {"triple_intersection_empty", v.triple_intersection_empty},
          {"points", pts}};
}

Checks bidouble_selftest() {
  Checks c;
  for (const auto& name : known_example_names())
    c.run("example " + name + " classifies as expected", [&] {
      bool ok = false;
      example_json(name, ok);
      return ok;
    });
  c.run("blow-up normalization trace", [] {
    DivisorMultiset d;
    d.lists[0] = {{"line", 1}, {"E", 1}};
    d.lists[1] = {{"L1", 1}, {"L2", 1}, {"L3", 1}, {"E", 3}};
    d.lists[2] = {{"cubic", 1}};
    DivisorMultiset want;
    want.lists[0] = {{"line", 1}};
    want.lists[1] = {{"L1", 1}, {"L2", 1}, {"L3", 1}};
    want.lists[2] = {{"E", 1}, {"cubic", 1}};
    auto n = normalize_building_data(d);
    return n.lists == want.lists;
  });
  c.run("normalization is idempotent with multiplicities in {0,1}", [] {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> mult(0, 4), pick(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
      DivisorMultiset d;
      for (auto& list : d.lists)
        for (const char* l : {"a", "b", "c", "d"})
          if (pick(rng)) list.emplace_back(l, mult(rng));
      auto n = normalize_building_data(d);
      if (normalize_building_data(n).lists != n.lists) return false;
      for (const auto& list : n.lists)
        for (const auto& [label, m] : list)
          if (m != 1) return false;
    }
    return true;
  });
  return c;
}

// ---------------------------------------------------------------- fibration

json solutions_json(const std::vector<MultipleFibreSolution>& sols) {
  json out = json::array();
  for (const auto& s : sols) out.push_back({{"k", s.k}, {"multiplicities", s.multiplicities}});
  return out;
}

json bielliptic_json(bool& ok) {
  json rows = json::array();
  std::vector<int> admissible;
  for (const auto& row : bielliptic_table()) {
    auto a = bielliptic_admissible(row);
    json r = {{"type", row.type_index},         {"group", row.group},
              {"gamma", row.gamma},             {"multiplicities", row.multiplicities},
              {"mu", row.mu},                   {"mu_over_gamma", rational_json(a.mu_over_gamma)},
              {"admissible", a.admissible}};
    if (a.witness) r["witness"] = {a.witness->first, a.witness->second};
    rows.push_back(r);
    if (a.admissible) admissible.push_back(row.type_index);
  }
  ok = admissible == std::vector<int>{1, 3, 5, 7};
  return {{"rows", rows}, {"admissible_types", admissible}};
}

json hirzebruch_json(bool& ok) {
  auto h = hirzebruch_branch_solve();
  ok = h.k == 10 && h.rewriting_holds && h.pencil_disjoint;
  return {{"k", rational_json(h.k)}, {"rewriting_holds", h.rewriting_holds}, {"pencil_disjoint", h.pencil_disjoint}};
}

json chi_json(const ChiReport& r) {
  return {{"r", r.r},
          {"chi_tilde", r.chi_tilde},
          {"degrees_bounded", r.degrees_bounded},
          {"matches", r.matches},
          {"valid", r.valid}};
}

Checks fibration_selftest() {
  Checks c;
  c.run("multiple fibres k_min=2 r=3 bound=12 give (2,{2,2,2})", [] {
    return solve_multiple_fibres(2, 3, 12) == std::vector<MultipleFibreSolution>{{2, {2, 2, 2}}};
  });
  c.run("bielliptic admissible exactly on types 1,3,5,7", [] {
    bool ok = false;
    bielliptic_json(ok);
    return ok;
  });
  c.run("branch class on F1 gives k = 10", [] {
    bool ok = false;
    hirzebruch_json(ok);
    return ok;
  });
  c.run("every normal stratum row is reproduced by chi bookkeeping", [] {
    for (const auto& row : normal_strata()) {
      std::vector<long> degrees;
      for (long d : row.pattern) degrees.push_back(d == 0 ? 1 : d);
      auto rep = chi_bookkeeping(row.chi_tilde + long(degrees.size()), degrees);
      if (std::find(rep.matches.begin(), rep.matches.end(), row.type) == rep.matches.end()) return false;
    }
    return true;
  });
  c.run("degree above 4 is rejected", [] { return !chi_bookkeeping(2, {5}).valid; });
  c.run("plurigenus for Type B data is 1", [] {
    FibrationData fd{1, 1, {}, 1, false};
    return plurigenus(fd, 1) == 1;
  });
  return c;
}

// ---------------------------------------------------------------- glue

NamedConfig glue_config(const std::string& source) {
  namespace fs = std::filesystem;
  const auto& names = builtin_config_names();
  if (!fs::exists(source)) {
    std::string stem = fs::path(source).stem().string();
    if (std::find(names.begin(), names.end(), stem) != names.end()) return builtin_config(stem);
  }
  json j = load_json_file(source);
  return input([&] {
    NamedConfig nc{config_from_json(j), symmetry_from_json(j)};
    nc.config.validate();
    return nc;
  });
}

size_t count_flag(const GluingEnumeration& e, const std::string& flag) {
  return std::count_if(e.orbits.begin(), e.orbits.end(), [&](const GluingOrbit& o) { return o.feasibility == flag; });
}

std::vector<std::vector<size_t>> orbit_cusp_sizes(const GluingEnumeration& e) {
  std::vector<std::vector<size_t>> out;
  for (const auto& o : e.orbits) {
    std::vector<size_t> s;
    for (const auto& cls : o.cusps) s.push_back(cls.size());
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Checks glue_selftest() {
  Checks c;
  auto run = [](const char* name) {
    auto nc = builtin_config(name);
    return enumerate_gluings(nc.config, nc.symmetry);
  };
  c.run("four lines: 3 orbits with cusp sizes {1,1,4},{1,1,4},{1,2,3}", [&] {
    return orbit_cusp_sizes(run("four-lines")) ==
           std::vector<std::vector<size_t>>{{1, 1, 4}, {1, 1, 4}, {1, 2, 3}};
  });
  c.run("cubic and line: no gluing", [&] { return run("cubic-line").orbits.empty(); });
  c.run("two conics: exactly the {2,2} orbit is excluded", [&] {
    auto e = run("two-conics");
    for (const auto& o : e.orbits) {
      std::vector<size_t> s;
      for (const auto& cls : o.cusps) s.push_back(cls.size());
      std::sort(s.begin(), s.end());
      bool excluded = o.feasibility == "excluded-etale-quotient";
      if (excluded != (s == std::vector<size_t>{2, 2})) return false;
    }
    return count_flag(e, "excluded-etale-quotient") == 1;
  });
  c.run("minimum number of nodes is 3", [] { return minimum_nodes_check() == 3; });
  c.run("cusp classes do not depend on matching order", [] {
    auto nc = builtin_config("four-lines");
    auto invs = gorenstein_involutions(nc.config);
    MarkedConfig reversed = nc.config;
    std::reverse(reversed.matching.begin(), reversed.matching.end());
    for (const auto& inv : invs) {
      auto partition_marks = [](const MarkedConfig& cfg, const CuspPartition& p) {
        std::vector<std::vector<std::string>> out;
        for (const auto& cls : p) {
          std::vector<std::string> marks;
          for (size_t i : cls) marks.push_back(std::min(cfg.matching[i].first, cfg.matching[i].second));
          std::sort(marks.begin(), marks.end());
          out.push_back(marks);
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      if (partition_marks(nc.config, cusp_classes(nc.config, inv)) !=
          partition_marks(reversed, cusp_classes(reversed, inv)))
        return false;
    }
    return true;
  });
  return c;
}

// ---------------------------------------------------------------- implicitize

json implicitize_report(const ParametrizationInput& in) {
  auto det = implicitize_detailed(in);
  auto forms = build_parametrization(in);
  Polynomial ref = reference_quartic(in);
  json nodes = json::array();
  bool all_nodes = true;
  for (const ProjectivePoint& p : {ProjectivePoint{1, 0, 0}, ProjectivePoint{0, 1, 0}, ProjectivePoint{0, 0, 1}}) {
    bool ok = verify_node(det.quartic, p);
    all_nodes = all_nodes && ok;
    nodes.push_back({{"point", point_json(p)}, {"node", ok}});
  }
  bool pullback = pull_back(det.quartic, forms).is_zero();
  bool tau = pull_back(det.quartic, compose_with_tau(in, forms)).is_zero();
  bool exact = det.quartic == ref;
  bool ok = exact && all_nodes && pullback && tau;
  json quartic = to_json(det.quartic);
  quartic["text"] = to_string(det.quartic);
  json param = json::array();
  for (const auto& f : forms) param.push_back(to_string(f));
  return {{"command", "implicitize"},
          {"verdict", verdict(ok)},
          {"a", rational_json(in.a)},
          {"b", rational_json(in.b)},
          {"parametrization", param},
          {"quartic", quartic},
          {"verification",
           {{"nodes", nodes},
            {"pullback_zero", pullback},
            {"tau_pullback_zero", tau},
            {"matches_closed_formula", exact},
            {"same_up_to_scalar", compare_up_to_scalar(det.quartic, ref)},
            {"anchored_to_y2z2", det.anchored_to_y2z2}}}};
}

Checks implicitize_selftest() {
  Checks c;
  c.run("(a,b) = (2,3) golden quartic", [] {
    Polynomial want = parse_polynomial(
        "21*x^2*y^2 + 40*x^2*y*z - 25*x*y^2*z - 4*x^2*z^2 + 5*x*y*z^2 + 6*y^2*z^2", plane_ring());
    return implicitize({2, 3}) == want;
  });
  c.run("random parameters: formula, nodes, pullback", [] {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    for (int done = 0; done < 5;) {
      ParametrizationInput in{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
      try {
        in.validate();
      } catch (const Error&) {
        continue;
      }
      ++done;
      if (implicitize_report(in)["verdict"] != "pass") return false;
    }
    return true;
  });
  c.run("degenerate parameters are rejected", [] {
    try {
      implicitize({1, 2});
    } catch (const Error&) {
      return true;
    }
    return false;
  });
  return c;
}

// ---------------------------------------------------------------- s2e

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

json s2e_report(const BiWeierstrass& ctx, int upto) {
  bool ok = true;
  json dims = json::array();
  for (int m = 1; m <= upto; ++m) {
    size_t d = ctx.rank(invariant_basis(ctx, m));
    ok = ok && d == size_t(m * (m + 1) / 2);
    dims.push_back({{"m", m}, {"dimension", d}, {"expected", m * (m + 1) / 2}});
  }
  bool generated = generation_check(ctx, upto);
  ok = ok && generated;

  auto t = t_generators(ctx);
  json anti = json::array();
  for (int m = 1; m <= upto; ++m) anti.push_back({{"m", m}, {"dimension", antidiagonal_kernel(ctx, m).size()}});
  auto k3 = antidiagonal_kernel(ctx, 3);
  std::vector<Polynomial> both = k3;
  both.push_back(t[4]);
  both.push_back(t[5]);
  bool anti_ok = k3.size() == 2 && ctx.rank(both) == 2;
  ok = ok && anti_ok;

  json cond = json::array();
  bool cond_ok = true;
  for (int m = 2; m <= std::min(upto, 5); ++m) {
    auto basis = conductor_vanishing_basis(ctx, m);
    long want = m * (m - 3) / 2 + 1;
    cond_ok = cond_ok && long(basis.size()) == want;
    json row = {{"m", m}, {"dimension", basis.size()}, {"expected", want}};
    if (m <= 4) row["basis"] = strings(basis);
    cond.push_back(row);
  }
  ok = ok && cond_ok;

  auto sg = s_generators_unchecked(ctx);
  ok = ok && sg.identity_one && sg.identity_two;
  json identities = {{"first", {{"holds", sg.identity_one},
                                {"t0_s4_scalar", to_string(sg.scalar_one)},
                                {"residual", to_string(sg.residual_one)}}},
                     {"second", {{"holds", sg.identity_two}, {"residual", to_string(sg.residual_two)}}}};

  auto thm = search_theorem_relations(ctx);
  json trials = json::array();
  json winner = nullptr;
  for (size_t i = 0; i < thm.trials.size(); ++i) {
    const auto& tr = thm.trials[i];
    json row = {{"assignment", tr.names}, {"same_ring", tr.same_ring}, {"solved", tr.solved}};
    if (!tr.note.empty()) row["note"] = tr.note;
    if (tr.solved) {
      row["lambda"] = to_string(*tr.lambda);
      row["mu_squared"] = to_string(*tr.mu_sq);
      winner = row;
    }
    trials.push_back(row);
  }
  ok = ok && thm.ok();
  json s = json::array();
  for (const auto& e : sg.s) s.push_back(to_string(e));

  return {{"command", "s2e verify"},
          {"verdict", verdict(ok)},
          {"parameters",
           {{"a", rational_json(ctx.params().a)},
            {"b", rational_json(ctx.params().b)},
            {"alpha", ctx.glue().symbolic ? json("alpha") : rational_json(ctx.glue().alpha)},
            {"beta", ctx.glue().symbolic ? json("beta") : rational_json(ctx.glue().beta)},
            {"symbolic", ctx.glue().symbolic}}},
          {"invariant_dimensions", dims},
          {"t_generators_generate", generated},
          {"antidiagonal",
           {{"dimensions", anti}, {"degree3_basis", strings(k3)}, {"degree3_equals_span_t4_t5", anti_ok}}},
          {"conductor", cond},
          {"s_generators", s},
          {"identities", identities},
          {"theorem",
           {{"successes", thm.successes.size()},
            {"assignment", winner},
            {"residuals", winner.is_null() ? json("nonzero") : json("0")},
            {"trials", trials}}}};
}

Checks s2e_selftest() {
  Checks c;
  BiWeierstrass ctx({1, 1}, {1, 1});
  c.run("normal form is idempotent", [&] {
    Polynomial p = parse_polynomial("y1^5*y2^3*z1 - x2*y2^4 + y1", ctx.ring());
    return ctx.normal_form(ctx.normal_form(p)) == ctx.normal_form(p);
  });
  c.run("full pipeline at (1,1,1,1)", [&] { return s2e_report(ctx, 6)["verdict"] == "pass"; });
  c.run("symbolic alpha, beta", [] { return s2e_report(BiWeierstrass({1, 1}, {0, 0, true}), 5)["verdict"] == "pass"; });
  c.run("non-generic glue is refused", [] {
    try {
      conductor_vanishing_basis(BiWeierstrass({1, 1}, {0, 1}), 3);
    } catch (const Error& e) {
      return std::string(e.what()) == "non-generic conductor";
    }
    return false;
  });
  return c;
}

// ---------------------------------------------------------------- catalog

json catalog_json() {
  auto cat = stratum_catalog();
  json rows = json::array();
  for (const auto& r : cat.rows) {
    json row = {{"name", r.name}, {"normal", r.normal}, {"description", r.description}};
    if (!r.dimensions.empty()) row["dimensions"] = r.dimensions;
    rows.push_back(row);
  }
  json strata_rows = json::array();
  for (const auto& r : normal_strata())
    strata_rows.push_back({{"kappa", r.kappa},
                           {"degrees", r.pattern},
                           {"chi_tilde", r.chi_tilde},
                           {"type", r.type},
                           {"unresolved", r.unresolved}});
  return {{"command", "catalog"},
          {"verdict", "pass"},
          {"strata", rows},
          {"normal_strata", strata_rows},
          {"total_moduli_dimension", cat.total_moduli_dimension}};
}

Checks catalog_selftest() {
  Checks c;
  auto cat = stratum_catalog();
  c.run("seven normal rows", [&] {
    return std::count_if(cat.rows.begin(), cat.rows.end(), [](const StratumEntry& e) { return e.normal; }) == 7;
  });
  c.run("moduli dimension 18", [&] { return cat.total_moduli_dimension == 18; });
  return c;
}

// ---------------------------------------------------------------- dispatch

struct Outcome {
  json report;
  std::string summary;
};

std::string summary_of(const json& report) {
  std::string s = report.value("command", "") + ": " + report.value("verdict", "");
  if (report.contains("checks")) {
    size_t ok = 0;
    for (const auto& r : report["checks"]) ok += r["ok"].get<bool>();
    s += " (" + std::to_string(ok) + "/" + std::to_string(report["checks"].size()) + " checks)";
  }
  return s;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "' at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string canonical_report(const json& report) {
  json body = report;
  if (body.is_object()) body.erase("meta");
  return body.dump(2);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for stable surfaces with K^2 = 1 and chi = 2.", "stratabench"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report to this file");
  app.set_version_flag("--version", kVersion);

  std::function<json()> action;
  auto selftest = [](CLI::App* sub, bool* flag) { sub->add_flag("--selftest", *flag, "Run this module's invariant suite"); };

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a weighted complete intersection");
  std::string weights = "1,2,2,3,3", relations = "6,6";
  int upto = 12;
  std::optional<long long> K2, chi, pg;
  bool hilbert_self = false;
  hilbert->add_option("--weights", weights, "Variable weights")->capture_default_str();
  hilbert->add_option("--relations", relations, "Relation degrees")->capture_default_str();
  hilbert->add_option("--upto", upto, "Largest degree")->capture_default_str()->check(CLI::Range(0, 200));
  hilbert->add_option("--K2", K2, "Compare with Riemann-Roch: K^2");
  hilbert->add_option("--chi", chi, "Compare with Riemann-Roch: chi");
  hilbert->add_option("--pg", pg, "Compare with Riemann-Roch: p_g");
  selftest(hilbert, &hilbert_self);
  hilbert->callback([&] {
    action = [&]() -> json {
      if (hilbert_self) return selftest_report("hilbert", hilbert_selftest());
      auto w = int_list<int>(weights, "--weights");
      auto r = int_list<int>(relations, "--relations");
      for (int x : w)
        if (x < 1) throw UsageError("--weights: weights must be positive");
      for (int x : r)
        if (x < 1) throw UsageError("--relations: degrees must be positive");
      auto h = ci_hilbert_series(w, r, upto);
      json rep = {{"command", "hilbert"},
                  {"weights", w},
                  {"relations", r},
                  {"coefficients", h.coefficients},
                  {"verdict", "pass"}};
      if (K2 || chi || pg) {
        if (!(K2 && chi && pg)) throw UsageError("--K2, --chi and --pg go together");
        json cmp = json::array();
        bool ok = true;
        for (int m = 1; m <= upto; ++m) {
          long long want = rr_prediction(*K2, *chi, *pg, m);
          ok = ok && want == h.coefficients[m];
          cmp.push_back({{"m", m}, {"series", h.coefficients[m]}, {"riemann_roch", want}});
        }
        rep["riemann_roch"] = cmp;
        rep["verdict"] = verdict(ok);
      }
      return rep;
    };
  });

  // canring
  auto* canring = app.add_subcommand("canring", "Canonical ring models and del Pezzo rings");
  canring->require_subcommand(0, 1);
  bool canring_self = false;
  selftest(canring, &canring_self);
  std::string model_source = "random";
  unsigned long seed = 1;
  int points = 5, resamples = 3;
  auto* canring_check = canring->add_subcommand("check", "Validate a model, classify automorphisms, count fibres");
  canring_check->add_option("--model", model_source, "Model JSON path, or 'random'")->capture_default_str();
  canring_check->add_option("--seed", seed, "Seed for random models and base points")->capture_default_str();
  canring_check->add_option("--points", points, "Random base points")->capture_default_str()->check(CLI::Range(0, 100));
  canring_check->add_option("--resamples", resamples, "Resamples per bad base point")
      ->capture_default_str()
      ->check(CLI::Range(0, 10));
  std::string dp_model;
  int dp_upto = 8;
  auto* canring_dp = canring->add_subcommand("delpezzo", "Anticanonical ring of a degree-1 del Pezzo model");
  canring_dp->add_option("--model", dp_model, "Model JSON path {a0,a2,a4,a6}; default is an example");
  canring_dp->add_option("--upto", dp_upto, "Largest degree")->capture_default_str()->check(CLI::Range(1, 100));
  canring->callback([&] {
    action = [&]() -> json {
      if (canring_self) return selftest_report("canring", canring_selftest());
      if (canring_check->parsed()) {
        auto m = canring_model(model_source, seed);
        auto v = input([&] { return validate_canring(m); });
        std::mt19937_64 rng(seed + 1);
        bool four = false;
        json counts = v.ok() ? fibre_counts(m, points, resamples, rng, four) : json::array();
        return {{"command", "canring check"},
                {"verdict", verdict(v.ok() && four)},
                {"model", model_json(m)},
                {"validation",
                 {{"shape", v.shape},
                  {"coprime", v.coprime},
                  {"avoids_singular_locus", v.avoids_singular_locus},
                  {"diagnostics", v.diagnostics}}},
                {"automorphisms", v.ok() ? json(to_string(classify_relative_automorphisms(m))) : json(nullptr)},
                {"fibre_counts", counts},
                {"quadruple_cover", four}};
      }
      if (canring_dp->parsed()) {
        const Ring& D = del_pezzo_ring();
        DelPezzoModel m{1, parse_polynomial("x1^2", D), parse_polynomial("x1^4 + x2^4", D),
                        elliptic_involution_a6(1, 2, 3)};
        if (!dp_model.empty()) {
          json j = load_json_file(dp_model);
          m = input([&] {
            return DelPezzoModel{parse_rational(j.at("a0").get<std::string>()), polynomial_from_json(j.at("a2"), D),
                                 polynomial_from_json(j.at("a4"), D), polynomial_from_json(j.at("a6"), D)};
          });
        }
        auto rep = input([&] { return del_pezzo_report(m, dp_upto); });
        return {{"command", "canring delpezzo"},
                {"verdict", verdict(rep.anticanonical_matches && rep.restricted_matches)},
                {"f6", to_string(rep.f6)},
                {"anticanonical", rep.anticanonical.coefficients},
                {"anticanonical_matches", rep.anticanonical_matches},
                {"restricted", to_string(rep.restricted)},
                {"restricted_series", rep.restricted_series.coefficients},
                {"restricted_matches", rep.restricted_matches}};
      }
      throw UsageError("canring: expected 'check', 'delpezzo' or --selftest");
    };
  });

  // bidouble
  auto* bidouble = app.add_subcommand("bidouble", "Bi-double cover building data");
  bidouble->require_subcommand(0, 1);
  bool bidouble_self = false;
  selftest(bidouble, &bidouble_self);
  std::string data_source, point_text, divisors_path;
  auto* bd_classify = bidouble->add_subcommand("classify", "Validate building data and classify points");
  bd_classify->add_option("--data", data_source, "Building data JSON path or example name")->required();
  bd_classify->add_option("--point", point_text, "Point as 'x,y,z' (default: the example's special points)");
  auto* bd_normalize = bidouble->add_subcommand("normalize", "Reduce divisor multiplicities");
  bd_normalize->add_option("--divisors", divisors_path, "DivisorMultiset JSON path")->required();
  auto* bd_examples = bidouble->add_subcommand("examples", "Classify every built-in example");
  bidouble->callback([&] {
    action = [&]() -> json {
      if (bidouble_self) return selftest_report("bidouble", bidouble_selftest());
      if (bd_classify->parsed()) {
        BuildingData bd = building_data(data_source);
        auto v = input([&] { return validate_building_data(bd); });
        std::vector<std::pair<ProjectivePoint, std::optional<LocalClass>>> pts;
        if (!point_text.empty()) {
          pts.emplace_back(input([&] { return parse_point(point_text); }), std::nullopt);
        } else {
          const auto& names = known_example_names();
          if (std::find(names.begin(), names.end(), data_source) == names.end())
            throw UsageError("--point is required for building data from a file");
          for (const auto& [p, c] : known_example_points(data_source)) pts.emplace_back(p, c);
        }
        json rows = json::array();
        bool ok = v.ok();
        for (const auto& [p, want] : pts) {
          auto got = input([&] { return classify_point(bd, p); });
          json row = classification_json(got);
          row["point"] = point_json(p);
          if (want) {
            row["expected"] = to_string(*want);
            ok = ok && got.tag == *want;
          }
          rows.push_back(row);
        }
        return {{"command", "bidouble classify"},
                {"verdict", verdict(ok)},
                {"D0", to_string(bd.D0)},
                {"D1", to_string(bd.D1)},
                {"D2", to_string(bd.D2)},
                {"triple_intersection_empty", v.triple_intersection_empty},
                {"points", rows}};
      }
      if (bd_normalize->parsed()) {
        auto d = multiset_from_json(load_json_file(divisors_path));
        auto n = input([&] { return normalize_building_data(d); });
        bool idempotent = normalize_building_data(n).lists == n.lists;
        return {{"command", "bidouble normalize"},
                {"verdict", verdict(idempotent)},
                {"input", multiset_json(d)},
                {"normalized", multiset_json(n)},
                {"idempotent", idempotent}};
      }
      if (bd_examples->parsed()) {
        json rows = json::array();
        bool all = true;
        for (const auto& name : known_example_names()) {
          bool ok = false;
          rows.push_back(example_json(name, ok));
          all = all && ok;
        }
        return {{"command", "bidouble examples"}, {"verdict", verdict(all)}, {"examples", rows}};
      }
      throw UsageError("bidouble: expected 'classify', 'normalize', 'examples' or --selftest");
    };
  });

  // fibration
  auto* fibration = app.add_subcommand("fibration", "Numerics of elliptic fibrations and normal strata");
  fibration->require_subcommand(0, 1);
  bool fibration_self = false;
  selftest(fibration, &fibration_self);
  long k_min = 2, bound = 12;
  std::optional<long> fibre_r;
  auto* fb_solve = fibration->add_subcommand("solve", "Multiple-fibre equation k(-1 + sum (m_i-1)/m_i) = 1");
  fb_solve->add_option("--k-min", k_min, "Smallest k")->capture_default_str();
  fb_solve->add_option("--r", fibre_r, "Number of multiple fibres (default: all)");
  fb_solve->add_option("--bound", bound, "Bound on k and m_i")->capture_default_str()->check(CLI::Range(1L, 200L));
  auto* fb_biell = fibration->add_subcommand("bielliptic", "Admissibility of the seven bielliptic types");
  auto* fb_hirz = fibration->add_subcommand("hirzebruch", "Branch class on F1");
  long chi_X = 2;
  std::string degrees;
  auto* fb_chi = fibration->add_subcommand("chi", "chi bookkeeping against the normal strata");
  fb_chi->add_option("--chi", chi_X, "chi of the stable surface")->capture_default_str();
  fb_chi->add_option("--degrees", degrees, "Degrees d_i, comma separated");
  int genus = 0;
  long deg_L = 0, k_mult = 1, plur_m = 1;
  bool torsion = false;
  std::string mults;
  auto* fb_plur = fibration->add_subcommand("plurigenus", "Plurigenera from fibration data");
  fb_plur->add_option("--genus", genus, "Base genus (0 or 1)")->capture_default_str();
  fb_plur->add_option("--deg-L", deg_L, "deg L")->capture_default_str();
  fb_plur->add_option("--mult", mults, "Multiple fibre multiplicities");
  fb_plur->add_option("--k", k_mult, "Multisection degree")->capture_default_str();
  fb_plur->add_option("--m", plur_m, "Plurigenus index")->capture_default_str()->check(CLI::Range(1L, 1000L));
  fb_plur->add_flag("--torsion", torsion, "L is torsion (genus 1, deg L = 0)");
  fibration->callback([&] {
    action = [&]() -> json {
      if (fibration_self) return selftest_report("fibration", fibration_selftest());
      if (fb_solve->parsed()) {
        auto sols = input([&] { return solve_multiple_fibres(k_min, fibre_r, bound); });
        return {{"command", "fibration solve"}, {"verdict", "pass"}, {"solutions", solutions_json(sols)}};
      }
      if (fb_biell->parsed()) {
        bool ok = false;
        json j = bielliptic_json(ok);
        j["command"] = "fibration bielliptic";
        j["verdict"] = verdict(ok);
        return j;
      }
      if (fb_hirz->parsed()) {
        bool ok = false;
        json j = hirzebruch_json(ok);
        j["command"] = "fibration hirzebruch";
        j["verdict"] = verdict(ok);
        return j;
      }
      if (fb_chi->parsed()) {
        auto d = int_list<long>(degrees, "--degrees");
        auto rep = input([&] { return chi_bookkeeping(chi_X, d); });
        json j = chi_json(rep);
        j["command"] = "fibration chi";
        j["verdict"] = verdict(rep.valid);
        return j;
      }
      if (fb_plur->parsed()) {
        FibrationData fd{genus, deg_L, int_list<long>(mults, "--mult"), k_mult, torsion};
        input([&] {
          fd.validate();
          return 0;
        });
        return {{"command", "fibration plurigenus"},
                {"verdict", "pass"},
                {"K_dot_E", rational_json(k_dot_multisection(fd))},
                {"m", plur_m},
                {"plurigenus", plurigenus(fd, plur_m)}};
      }
      throw UsageError("fibration: expected 'solve', 'bielliptic', 'hirzebruch', 'chi', 'plurigenus' or --selftest");
    };
  });

  // glue
  auto* glue = app.add_subcommand("glue", "Gluing combinatorics of the double curve");
  glue->require_subcommand(0, 1);
  bool glue_self = false;
  selftest(glue, &glue_self);
  std::string config_source;
  auto* gl_enum = glue->add_subcommand("enumerate", "Enumerate gluing involutions up to symmetry");
  gl_enum->add_option("--config", config_source, "Config JSON path or built-in name")->required();
  auto* gl_min = glue->add_subcommand("minimum-nodes", "Smallest node count admitting a gluing");
  long nodes = 0;
  bool collinear = false, irreducible = false;
  auto* gl_quartic = glue->add_subcommand("quartic", "Structure of a nodal plane quartic");
  gl_quartic->add_option("--nodes", nodes, "Number of nodes")->required();
  gl_quartic->add_flag("--collinear-triple", collinear, "Three nodes are collinear");
  gl_quartic->add_flag("--irreducible", irreducible, "The quartic is irreducible");
  glue->callback([&] {
    action = [&]() -> json {
      if (glue_self) return selftest_report("glue", glue_selftest());
      if (gl_enum->parsed()) {
        auto nc = glue_config(config_source);
        auto e = input([&] { return enumerate_gluings(nc.config, nc.symmetry); });
        json j = to_json(nc.config, e);
        j["command"] = "glue enumerate";
        j["verdict"] = "pass";
        j["orbit_count"] = e.orbits.size();
        return j;
      }
      if (gl_min->parsed()) {
        auto r = minimum_nodes_report();
        json rows = json::array();
        for (size_t mu = 0; mu < r.counts.size(); ++mu)
          rows.push_back({{"mu_bar", mu},
                          {"candidates", r.counts[mu][0]},
                          {"chi_passing", r.counts[mu][1]},
                          {"feasible", r.counts[mu][2]}});
        return {{"command", "glue minimum-nodes"}, {"verdict", "pass"}, {"rows", rows}, {"minimum", r.minimum}};
      }
      if (gl_quartic->parsed()) {
        auto q = input([&] { return quartic_case_table(nodes, {collinear, irreducible}); });
        return {{"command", "glue quartic"},
                {"verdict", verdict(q.flags_consistent)},
                {"nodes", q.node_count},
                {"reducible", q.reducible},
                {"description", q.description},
                {"flags_consistent", q.flags_consistent}};
      }
      throw UsageError("glue: expected 'enumerate', 'minimum-nodes', 'quartic' or --selftest");
    };
  });

  // implicitize
  auto* implicit = app.add_subcommand("implicitize", "Plane quartic through a rational sextic parametrization");
  std::string a_text, b_text;
  bool implicit_self = false;
  implicit->add_option("--a", a_text, "Parameter a");
  implicit->add_option("--b", b_text, "Parameter b");
  selftest(implicit, &implicit_self);
  implicit->callback([&] {
    action = [&]() -> json {
      if (implicit_self) return selftest_report("implicitize", implicitize_selftest());
      if (a_text.empty() || b_text.empty()) throw UsageError("implicitize: --a and --b are required");
      ParametrizationInput in{rational_flag(a_text, "--a"), rational_flag(b_text, "--b")};
      input([&] {
        in.validate();
        return 0;
      });
      return implicitize_report(in);
    };
  });

  // s2e
  auto* s2e = app.add_subcommand("s2e", "Canonical ring of the symmetric square gluing");
  s2e->require_subcommand(0, 1);
  bool s2e_self = false;
  selftest(s2e, &s2e_self);
  std::string sa = "1", sb = "1", salpha = "1", sbeta = "1";
  bool symbolic = false;
  int s2e_upto = 6;
  auto* s2e_verify = s2e->add_subcommand("verify", "Run the full pipeline");
  s2e_verify->add_option("--a", sa, "Weierstrass a")->capture_default_str();
  s2e_verify->add_option("--b", sb, "Weierstrass b")->capture_default_str();
  s2e_verify->add_option("--alpha", salpha, "Gluing alpha")->capture_default_str();
  s2e_verify->add_option("--beta", sbeta, "Gluing beta")->capture_default_str();
  s2e_verify->add_flag("--symbolic", symbolic, "Treat alpha, beta as indeterminates");
  s2e_verify->add_option("--upto", s2e_upto, "Largest degree")->capture_default_str()->check(CLI::Range(3, 6));
  s2e->callback([&] {
    action = [&]() -> json {
      if (s2e_self) return selftest_report("s2e", s2e_selftest());
      if (!s2e_verify->parsed()) throw UsageError("s2e: expected 'verify' or --selftest");
      WeierstrassParams w{rational_flag(sa, "--a"), rational_flag(sb, "--b")};
      GluingParams g{rational_flag(salpha, "--alpha"), rational_flag(sbeta, "--beta"), symbolic};
      auto ctx = input([&] {
        BiWeierstrass c(w, g);
        if (!g.generic()) throw UsageError("non-generic conductor: alpha and beta must both be nonzero");
        return c;
      });
      return s2e_report(ctx, s2e_upto);
    };
  });

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Strata of the moduli space");
  bool catalog_self = false;
  selftest(catalog, &catalog_self);
  catalog->callback([&] {
    action = [&]() -> json { return catalog_self ? selftest_report("catalog", catalog_selftest()) : catalog_json(); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  json report;
  try {
    report = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    report = {{"command", args.empty() ? "" : args[0]}, {"verdict", "fail"}, {"error", e.what()}};
  }

  report["meta"] = {{"tool", "stratabench"},
                    {"version", kVersion},
                    {"arguments", args},
                    {"step_budget", GbOptions::from_env().step_budget}};
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    err << summary_of(report) << "\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    f << text;
    out << summary_of(report) << "\n";
  }
  return report["verdict"] == "pass" ? kExitOk : kExitVerificationFailed;
}

}  // namespace strata
