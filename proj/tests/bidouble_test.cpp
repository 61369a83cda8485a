#include <gtest/gtest.h>

#include <random>

#include "stratabench/bidouble.hpp"

using namespace strata;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s, plane_ring()); }

using Matrix = std::array<std::array<Rational, 3>, 3>;

// D(v) -> D(Mv); a point q of the transformed curve corresponds to Mq.
Polynomial pull_back(const Polynomial& f, const Matrix& M) {
  const char* names[] = {"x", "y", "z"};
  std::map<std::string, Polynomial> sub;
  for (int i = 0; i < 3; ++i) {
    Polynomial row(plane_ring());
    for (int j = 0; j < 3; ++j) row += M[i][j] * Polynomial::variable(plane_ring(), j);
    sub.emplace(names[i], row);
  }
  return substitute(f, sub, plane_ring());
}

Rational det(const Matrix& M) {
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

// Solve M q = p by Cramer.
ProjectivePoint solve(const Matrix& M, const ProjectivePoint& p) {
  Rational d = det(M);
  ProjectivePoint q;
  for (int c = 0; c < 3; ++c) {
    Matrix A = M;
    for (int r = 0; r < 3; ++r) A[r][c] = p[r];
    q[c] = det(A) / d;
  }
  return q;
}

DivisorMultiset multiset(std::vector<LabeledMultiplicity> a, std::vector<LabeledMultiplicity> b,
                         std::vector<LabeledMultiplicity> c) {
  return {{std::move(a), std::move(b), std::move(c)}};
}

}  // namespace

TEST(ValidateBuildingData, Examples) {
  EXPECT_TRUE(validate_building_data({P("x"), P("y^3"), P("z^3")}).ok());
  auto bad = validate_building_data({P("x"), P("y^3"), P("y*z^2")});
  EXPECT_TRUE(bad.degrees);
  EXPECT_FALSE(bad.triple_intersection_empty);
  EXPECT_THROW(validate_building_data({P("x^2"), P("y^3"), P("z^3")}), Error);
  EXPECT_THROW(validate_building_data({P("x"), P("y^3 + z"), P("z^3")}), Error);
}

TEST(KnownExamples, AllValidate) {
  for (const auto& name : known_example_names()) {
    BuildingData bd = known_examples(name);
    EXPECT_TRUE(validate_building_data(bd).ok()) << name;
    for (const auto& [pt, cls] : known_example_points(name))
      EXPECT_EQ(classify_point(bd, pt).tag, cls) << name << " " << to_string(pt);
  }
  EXPECT_THROW(known_examples("Z9"), Error);
}

TEST(KnownExamples, Z1LinesPassThroughPointOfD2) {
  BuildingData bd = known_examples("Z1");
  auto c = classify_point(bd, {0, 0, 1});
  EXPECT_EQ(c.multiplicities, (std::array<unsigned, 3>{0, 3, 1}));
  EXPECT_EQ(c.tag, LocalClass::EllipticDegree1);
}

TEST(ClassifyPoint, Examples) {
  // Three lines of D1 through P with D0 transverse.
  BuildingData deg1{P("x + y"), P("y*(x - y)*(x - 2*y)"), P("z^3 + x^3")};
  EXPECT_EQ(classify_point(deg1, {0, 0, 1}).tag, LocalClass::EllipticDegree1);

  BuildingData deg4{P("z"), P("x*y*z + x^3 + y^3"), P("(x - y)*(x + y)*z + x^3 - 2*y^3")};
  EXPECT_EQ(classify_point(deg4, {0, 0, 1}).tag, LocalClass::EllipticDegree4);

  BuildingData smooth{P("x"), P("y*z^2 + x^3 + y^3"), P("z^3 + x^3 + y^3")};
  auto s = classify_point(smooth, {0, 0, 1});
  EXPECT_EQ(s.tag, LocalClass::BranchSmooth);
  EXPECT_EQ(s.multiplicities, (std::array<unsigned, 3>{1, 1, 0}));

  EXPECT_THROW(classify_point(smooth, {1, 1, 1}), Error);
}

TEST(ClassifyPoint, NonOrdinary) {
  // D0 tangent to D1 at P.
  BuildingData tangent{P("y"), P("y*z^2 - x^2*z + x^3"), P("z^3 + x^3 + y^3")};
  auto c = classify_point(tangent, {0, 0, 1});
  EXPECT_EQ(c.tag, LocalClass::Other);
  EXPECT_FALSE(c.diagnostic.empty());
  // Cusp on D1.
  BuildingData cusp{P("z"), P("y^2*z - x^3"), P("x^3 + y^3 + z^3")};
  EXPECT_EQ(classify_point(cusp, {0, 0, 1}).tag, LocalClass::Other);
}

TEST(ClassifyPoint, InvariantUnderProjectivities) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  for (const auto& name : known_example_names()) {
    BuildingData bd = known_examples(name);
    for (int trial = 0; trial < 3; ++trial) {
      Matrix M;
      do
        for (auto& row : M)
          for (auto& e : row) e = Rational(c(rng), 1 + (c(rng) + 4) % 3);
      while (det(M) == 0);
      BuildingData moved{pull_back(bd.D0, M), pull_back(bd.D1, M), pull_back(bd.D2, M)};
      for (const auto& [pt, cls] : known_example_points(name)) {
        auto a = classify_point(bd, pt), b = classify_point(moved, solve(M, pt));
        EXPECT_EQ(a.tag, b.tag) << name;
        EXPECT_EQ(a.multiplicities, b.multiplicities) << name;
      }
    }
  }
}

TEST(Normalize, Examples) {
  auto disjoint = multiset({{"line", 1}}, {{"L1", 1}, {"L2", 1}}, {{"cubic", 1}});
  EXPECT_EQ(normalize_building_data(disjoint), disjoint);

  auto blowup = multiset({{"E", 1}, {"line", 1}}, {{"E", 3}, {"L1", 1}, {"L2", 1}, {"L3", 1}}, {{"cubic", 1}});
  EXPECT_EQ(normalize_building_data(blowup),
            multiset({{"line", 1}}, {{"L1", 1}, {"L2", 1}, {"L3", 1}}, {{"E", 1}, {"cubic", 1}}));

  auto all_three = multiset({{"G", 2}}, {{"G", 1}}, {{"G", 1}});
  EXPECT_EQ(normalize_building_data(all_three), multiset({{"G", 1}}, {}, {}));

  // Odd in all three lists: the moved copy cancels the third.
  EXPECT_EQ(normalize_building_data(multiset({{"G", 1}}, {{"G", 1}}, {{"G", 1}})), multiset({}, {}, {}));
  EXPECT_THROW(normalize_building_data(multiset({{"A", 1}, {"A", 1}}, {}, {})), Error);
}

TEST(Normalize, IdempotentAndReduced) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> mult(0, 4), pick(0, 1);
  const char* labels[] = {"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 200; ++trial) {
    DivisorMultiset d;
    for (auto& list : d.lists)
      for (const char* l : labels)
        if (pick(rng)) list.emplace_back(l, mult(rng));
    auto n = normalize_building_data(d);
    EXPECT_EQ(normalize_building_data(n), n);
    std::set<std::string> seen;
    for (const auto& list : n.lists)
      for (const auto& [label, m] : list) {
        EXPECT_EQ(m, 1);
        EXPECT_TRUE(seen.insert(label).second);
      }
  }
}
