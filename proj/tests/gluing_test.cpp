#include <gtest/gtest.h>

#include <random>
#include <set>

#include "stratabench/gluing.hpp"
#include "stratabench/polynomial.hpp"

using namespace strata;

namespace {

// Swap lines 1 <-> 2 and 3 <-> 4 via the two bijections.
GluingInvolution lines_involution(const std::map<std::string, std::string>& phi12,
                                  const std::map<std::string, std::string>& phi34) {
  GluingInvolution inv{{1, 0, 3, 2}, {}, {0, 0, 0, 0}};
  for (const auto* phi : {&phi12, &phi34})
    for (const auto& [a, b] : *phi) {
      inv.mark_map[a] = b;
      inv.mark_map[b] = a;
    }
  return inv;
}

GluingInvolution X21() {
  return lines_involution({{"P12", "P21"}, {"P13", "P24"}, {"P14", "P23"}},
                          {{"P31", "P41"}, {"P32", "P42"}, {"P34", "P43"}});
}
GluingInvolution X22() {
  return lines_involution({{"P12", "P21"}, {"P13", "P23"}, {"P14", "P24"}},
                          {{"P31", "P42"}, {"P32", "P41"}, {"P34", "P43"}});
}
// Both bijections preserve the order of the remaining points.
GluingInvolution straight() {
  return lines_involution({{"P12", "P21"}, {"P13", "P23"}, {"P14", "P24"}},
                          {{"P31", "P41"}, {"P32", "P42"}, {"P34", "P43"}});
}
GluingInvolution X23() {
  return lines_involution({{"P12", "P23"}, {"P13", "P24"}, {"P14", "P21"}},
                          {{"P31", "P42"}, {"P32", "P41"}, {"P34", "P43"}});
}

// Partition by node names, independent of matching order.
std::set<std::set<std::string>> named(const MarkedConfig& c, const CuspPartition& p) {
  std::set<std::set<std::string>> out;
  for (const auto& cls : p) {
    std::set<std::string> s;
    for (size_t k : cls) s.insert(std::min(c.matching[k].first, c.matching[k].second));
    out.insert(s);
  }
  return out;
}

std::multiset<size_t> sizes(const CuspPartition& p) {
  std::multiset<size_t> s;
  for (const auto& c : p) s.insert(c.size());
  return s;
}

}  // namespace

TEST(CuspClasses, FourLinesTable) {
  auto c = builtin_config("four-lines").config;
  EXPECT_EQ(named(c, cusp_classes(c, X23())),
            (std::set<std::set<std::string>>{{"P12", "P23", "P14"}, {"P13", "P24"}, {"P34"}}));
  EXPECT_EQ(named(c, cusp_classes(c, X21())),
            (std::set<std::set<std::string>>{{"P12"}, {"P34"}, {"P13", "P14", "P23", "P24"}}));
  EXPECT_EQ(sizes(cusp_classes(c, X22())), (std::multiset<size_t>{1, 1, 4}));
}

TEST(CuspClasses, SingleSwappedNode) {
  MarkedConfig c{{{1, {"a", "b"}}}, {{"a", "b"}}};
  GluingInvolution inv{{0}, {{"a", "b"}, {"b", "a"}}, {0}};
  EXPECT_EQ(cusp_classes(c, inv), (CuspPartition{{0}}));
}

TEST(CuspClasses, IndependentOfOrder) {
  auto c = builtin_config("four-lines").config;
  MarkedConfig rev = c;
  std::reverse(rev.matching.begin(), rev.matching.end());
  for (auto& m : rev.matching) std::swap(m.first, m.second);
  for (const auto& inv : {X21(), X22(), X23()})
    EXPECT_EQ(named(c, cusp_classes(c, inv)), named(rev, cusp_classes(rev, inv)));
}

TEST(Involution, Validation) {
  auto c = builtin_config("four-lines").config;
  GluingInvolution bad = X21();
  bad.fixed_point_counts[0] = 2;
  EXPECT_THROW(validate_involution(c, bad), Error);
  GluingInvolution fixed{{0}, {{"a", "a"}}, {2}};
  EXPECT_THROW(validate_involution({{{0, {"a", "b"}}}, {{"a", "b"}}}, fixed), Error);
  EXPECT_EQ(admissible_fixed_point_counts(0), (std::vector<int>{2}));
  EXPECT_EQ(admissible_fixed_point_counts(1), (std::vector<int>{4, 0}));
  EXPECT_EQ(admissible_fixed_point_counts(3), (std::vector<int>{8, 4, 0}));
}

TEST(ChiCheck, Examples) {
  auto conics = builtin_config("two-conics").config;
  GluingInvolution caseA{{0, 1},
                         {{"Q1a", "Q2a"}, {"Q2a", "Q1a"}, {"Q3a", "Q4a"}, {"Q4a", "Q3a"},
                          {"Q1b", "Q3b"}, {"Q3b", "Q1b"}, {"Q2b", "Q4b"}, {"Q4b", "Q2b"}},
                         {2, 2}};
  auto a = chi_check(conics, caseA);
  EXPECT_EQ(a.mu_bar, 4);
  EXPECT_EQ(a.rho, 4);
  EXPECT_EQ(a.mu1, 1);
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(a.relation_holds);
  EXPECT_EQ(a.chi_D, -1);

  auto ctl = builtin_config("conic-two-lines").config;
  GluingInvolution caseB{{1, 0, 2},
                         {{"P1", "S2"}, {"S2", "P1"}, {"Q1", "P2"}, {"P2", "Q1"}, {"R1", "T2"}, {"T2", "R1"},
                          {"Q3", "S3"}, {"S3", "Q3"}, {"R3", "T3"}, {"T3", "R3"}},
                         {0, 0, 2}};
  auto b = chi_check(ctl, caseB);
  EXPECT_EQ(b.mu_bar, 5);
  EXPECT_EQ(b.rho, 2);
  EXPECT_EQ(b.mu1, 2);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(named(ctl, cusp_classes(ctl, caseB)),
            (std::set<std::set<std::string>>{{"P1", "Q1", "S2"}, {"R1", "T2"}}));

  // Two nodes, rho = 0, two classes: 2 != 0 + 4.
  MarkedConfig two{{{1, {"P1", "P2", "Q1", "Q2"}}}, {{"P1", "P2"}, {"Q1", "Q2"}}};
  GluingInvolution split{{0}, {{"P1", "P2"}, {"P2", "P1"}, {"Q1", "Q2"}, {"Q2", "Q1"}}, {0}};
  auto s = chi_check(two, split);
  EXPECT_EQ(s.mu1, 2);
  EXPECT_FALSE(s.holds);
  EXPECT_FALSE(s.relation_holds);
}

TEST(Enumerate, FourLines) {
  auto nc = builtin_config("four-lines");
  auto e = enumerate_gluings(nc.config, nc.symmetry);
  EXPECT_EQ(e.candidates, 108u);
  EXPECT_EQ(e.passing, 21u);
  ASSERT_EQ(e.orbits.size(), 3u);
  std::set<GluingInvolution, bool (*)(const GluingInvolution&, const GluingInvolution&)> reps(
      [](const GluingInvolution& a, const GluingInvolution& b) {
        return std::tie(a.component_map, a.mark_map, a.fixed_point_counts) <
               std::tie(b.component_map, b.mark_map, b.fixed_point_counts);
      });
  std::multiset<std::multiset<size_t>> patterns;
  for (const auto& o : e.orbits) {
    reps.insert(o.representative);
    patterns.insert(sizes(o.cusps));
    EXPECT_TRUE(o.chi.relation_holds);
    EXPECT_EQ(o.feasibility, "feasible");
    for (const auto& [a, b] : o.representative.mark_map) EXPECT_NE(a, b);
  }
  EXPECT_EQ(patterns, (std::multiset<std::multiset<size_t>>{{1, 1, 4}, {1, 1, 4}, {1, 2, 3}}));
  auto c21 = canonical_form(nc.config, nc.symmetry, X21());
  auto c22 = canonical_form(nc.config, nc.symmetry, X22());
  auto c23 = canonical_form(nc.config, nc.symmetry, X23());
  auto cs = canonical_form(nc.config, nc.symmetry, straight());
  EXPECT_TRUE(reps.count(c21));
  EXPECT_TRUE(reps.count(c23));
  EXPECT_TRUE(reps.count(cs));
  // The printed X22 is X21 relabelled by (13)(24).
  EXPECT_EQ(c21, c22);
  EXPECT_FALSE(c21 == cs);
  MarkPermutation s1324;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) {
        const int swap[] = {0, 3, 4, 1, 2};
        s1324["P" + std::to_string(i) + std::to_string(j)] = "P" + std::to_string(swap[i]) + std::to_string(swap[j]);
      }
  EXPECT_EQ(conjugate(nc.config, s1324, X21()), X22());
}

TEST(Enumerate, CubicLineIsEmpty) {
  auto nc = builtin_config("cubic-line");
  auto e = enumerate_gluings(nc.config, nc.symmetry);
  EXPECT_EQ(e.candidates, 0u);
  EXPECT_TRUE(e.orbits.empty());
}

TEST(Enumerate, TwoConics) {
  auto nc = builtin_config("two-conics");
  auto e = enumerate_gluings(nc.config, nc.symmetry);
  ASSERT_EQ(e.orbits.size(), 3u);
  std::map<std::multiset<size_t>, std::string> flag;
  for (const auto& o : e.orbits) {
    flag[sizes(o.cusps)] = o.feasibility;
    EXPECT_TRUE(o.chi.holds);
  }
  EXPECT_EQ(flag.at({4}), "feasible");
  EXPECT_EQ(flag.at({1, 3}), "feasible");
  EXPECT_EQ(flag.at({2, 2}), "excluded-etale-quotient");
}

TEST(Enumerate, ConicTwoLines) {
  auto nc = builtin_config("conic-two-lines");
  auto e = enumerate_gluings(nc.config, nc.symmetry);
  ASSERT_EQ(e.orbits.size(), 3u);
  for (const auto& o : e.orbits) {
    EXPECT_EQ(o.chi.mu_bar, 5);
    EXPECT_EQ(o.chi.rho, 2);
    EXPECT_EQ(o.chi.mu1, 2);
  }
}

TEST(Canonical, ConstantOnOrbitsAndIdempotent) {
  std::mt19937_64 rng(5);
  for (const char* name : {"four-lines", "two-conics", "conic-two-lines"}) {
    auto nc = builtin_config(name);
    auto all = gorenstein_involutions(nc.config);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1), gen(0, nc.symmetry.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      GluingInvolution x = all[pick(rng)], y = x;
      for (int step = 0; step < 6; ++step) y = conjugate(nc.config, nc.symmetry[gen(rng)], y);
      auto cx = canonical_form(nc.config, nc.symmetry, x);
      EXPECT_EQ(cx, canonical_form(nc.config, nc.symmetry, y)) << name;
      EXPECT_EQ(cx, canonical_form(nc.config, nc.symmetry, cx)) << name;
      EXPECT_EQ(sizes(cusp_classes(nc.config, x)), sizes(cusp_classes(nc.config, y)));
    }
  }
}

TEST(Symmetry, RejectsNonSymmetries) {
  auto nc = builtin_config("four-lines");
  MarkPermutation bad{{"P12", "P13"}, {"P13", "P12"}};
  EXPECT_THROW(enumerate_gluings(nc.config, {bad}), Error);
}

TEST(QuarticCases, Table) {
  EXPECT_FALSE(quartic_case_table(3, {false, false}).reducible);
  EXPECT_EQ(quartic_case_table(3, {true, false}).description, "smooth cubic and a general line");
  EXPECT_EQ(quartic_case_table(6).description, "four lines in general position");
  EXPECT_EQ(quartic_case_table(1).description, "irreducible");
  EXPECT_EQ(quartic_case_table(5).description, "smooth conic and two general lines");
  EXPECT_FALSE(quartic_case_table(4, {false, true}).flags_consistent);
  try {
    quartic_case_table(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "exceeds quartic bound");
  }
}

TEST(MinimumNodes, IsThree) {
  auto rep = minimum_nodes_report();
  EXPECT_EQ(rep.minimum, 3);
  EXPECT_EQ(minimum_nodes_check(), 3);
  // Smooth quartic: only rho = 0 passes and it descends.
  EXPECT_EQ(rep.counts[0][1], 1u);
  EXPECT_EQ(rep.counts[0][2], 0u);
  EXPECT_EQ(rep.counts[1][1], 0u);
  EXPECT_EQ(rep.counts[2][1], 2u);
  EXPECT_EQ(rep.counts[2][2], 0u);
  EXPECT_GT(rep.counts[3][2], 0u);
}

TEST(GluingJson, RoundTrip) {
  auto nc = builtin_config("conic-two-lines");
  json j = to_json(nc.config);
  j["symmetry"] = nc.symmetry;
  auto back = config_from_json(j);
  EXPECT_EQ(to_json(back), to_json(nc.config));
  EXPECT_EQ(symmetry_from_json(j), nc.symmetry);
  EXPECT_THROW(config_from_json(json{{"components", json::array()}}), Error);
  json dup = to_json(nc.config);
  dup["matching"].push_back({"P1", "Q1"});
  EXPECT_THROW(config_from_json(dup), Error);
}
