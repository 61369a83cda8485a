#include <gtest/gtest.h>

#include <random>

#include "stratabench/linalg.hpp"

using namespace strata;

namespace {

Ring params() { return WeightedRing::make({"alpha", "beta"}); }
Polynomial P(const char* s) { return parse_polynomial(s, params()); }

PolyVector multiply(const PolyMatrix& m, const PolyVector& x) {
  PolyVector out;
  for (const auto& row : m) {
    Polynomial s(x[0].ring());
    for (size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(RationalLinalg, RankAndKernel) {
  QMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2u);
  auto k = kernel_basis(m, 3);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (QVector{-1, -1, 1}));
  EXPECT_EQ(kernel_basis({}, 2).size(), 2u);
}

TEST(FractionFree, SymbolicKernelAnnihilates) {
  auto R = params();
  PolyMatrix m{{P("alpha"), P("beta"), P("1")},
               {P("alpha^2"), P("alpha*beta"), P("alpha + beta")},
               {P("0"), P("beta"), P("alpha")}};
  EXPECT_EQ(rank(m, R), 3u);
  PolyMatrix low{{P("alpha"), P("beta"), P("alpha + beta")},
                 {P("alpha*beta"), P("beta^2"), P("alpha*beta + beta^2")}};
  EXPECT_EQ(rank(low, R), 1u);
  auto k = kernel_basis(low, 3, R);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k)
    for (const auto& e : multiply(low, v)) EXPECT_TRUE(e.is_zero());
}

TEST(FractionFree, AgreesWithRationalRankAtRandomPoints) {
  std::mt19937_64 rng(23);
  auto R = WeightedRing::make({});
  std::uniform_int_distribution<int> c(-2, 2);
  for (int it = 0; it < 30; ++it) {
    size_t rows = 2 + it % 4, cols = 3 + it % 3;
    QMatrix q(rows, QVector(cols));
    PolyMatrix p(rows, PolyVector(cols, Polynomial(R)));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        q[i][j] = c(rng);
        p[i][j] = Polynomial::constant(R, q[i][j]);
      }
    EXPECT_EQ(rank(p, R), rank(q));
    for (const auto& v : kernel_basis(p, cols, R))
      for (const auto& e : multiply(p, v)) EXPECT_TRUE(e.is_zero());
  }
}
