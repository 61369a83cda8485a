#include <gtest/gtest.h>

#include <random>

#include "stratabench/ideal.hpp"

using namespace strata;

namespace {

Ring xyz() { return WeightedRing::make({"x", "y", "z"}); }
Polynomial P(const char* s, const Ring& r) { return parse_polynomial(s, r); }

GroebnerBasis gb_of(std::vector<Polynomial> g) {
  return buchberger(g, MonomialOrder::weighted_grevlex());
}

Polynomial random_poly(std::mt19937_64& rng, const Ring& r, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-5, 5);
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Monomial m(r->size());
    for (auto& x : m) x = e(rng);
    t.push_back({m, Rational(c(rng))});
  }
  return Polynomial::from_terms(r, t);
}

Polynomial random_nonconstant(std::mt19937_64& rng, const Ring& r, int terms, int max_exp) {
  for (;;) {
    Polynomial p = random_poly(rng, r, terms, max_exp);
    if (!p.is_constant()) return p;
  }
}

}  // namespace

TEST(MonomialOrder, BlockEliminationDominates) {
  auto r = WeightedRing::make({"u", "x", "y"});
  auto ord = MonomialOrder::block(1);
  EXPECT_TRUE(ord.greater({1, 0, 0}, {0, 9, 9}, *r));
  EXPECT_TRUE(ord.greater({0, 2, 0}, {0, 1, 1}, *r));
  EXPECT_FALSE(ord.greater({0, 0, 0}, {0, 0, 0}, *r));
}

TEST(Buchberger, Examples) {
  auto x1 = WeightedRing::make({"x"});
  auto g = gb_of({P("x", x1)});
  ASSERT_EQ(g.generators().size(), 1u);
  EXPECT_EQ(g.generators()[0], P("x", x1));

  auto r = xyz();
  auto lin = gb_of({P("x - y", r), P("y - z", r)});
  ASSERT_EQ(lin.generators().size(), 2u);
  EXPECT_EQ(lin.generators()[0], P("y - z", r));
  EXPECT_EQ(lin.generators()[1], P("x - z", r));

  auto mono = gb_of({P("x^2", r), P("x*y", r), P("y^2", r)});
  EXPECT_EQ(mono.generators().size(), 3u);
  EXPECT_TRUE(mono.reduced());

  EXPECT_THROW(buchberger({P("x", r), P("x", x1)}, MonomialOrder::weighted_grevlex()), Error);
}

TEST(Buchberger, SelfChecksOnRandomIdeals) {
  std::mt19937_64 rng(5);
  auto r = xyz();
  for (int it = 0; it < 12; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_nonconstant(rng, r, 3, 2));
    auto gb = gb_of(gens);
    EXPECT_TRUE(satisfies_buchberger_criterion(gb));
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
    Polynomial p = random_poly(rng, r, 6, 3);
    Polynomial n = normal_form(p, gb);
    EXPECT_EQ(normal_form(n, gb), n);
    for (const auto& g : gb.generators()) EXPECT_EQ(g.leading_term().coeff, 1);
  }
}

TEST(Buchberger, BlockOrderSelfCheck) {
  std::mt19937_64 rng(9);
  auto r = WeightedRing::make({"u", "x", "y"});
  for (int it = 0; it < 8; ++it) {
    std::vector<Polynomial> gens{random_nonconstant(rng, r, 3, 2), random_nonconstant(rng, r, 3, 2)};
    auto gb = buchberger(gens, MonomialOrder::block(1));
    EXPECT_TRUE(satisfies_buchberger_criterion(gb));
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb).is_zero());
  }
}

TEST(Buchberger, StepBudgetExhaustion) {
  auto r = xyz();
  GbOptions tiny;
  tiny.step_budget = 1;
  EXPECT_THROW(buchberger({P("x^2 - y", r), P("x*y - z", r), P("y^2 - x*z", r), P("z^3 - x", r)},
                          MonomialOrder::weighted_grevlex(), tiny),
               Error);
}

TEST(NormalForm, Examples) {
  auto r = xyz();
  EXPECT_EQ(normal_form(P("x^2", r), gb_of({P("x - y", r)})), P("y^2", r));
  EXPECT_EQ(normal_form(P("1", r), gb_of({P("x", r), P("y", r), P("z", r)})), P("1", r));
}

TEST(NormalForm, LinearMembershipAgreesWithGaussianElimination) {
  std::mt19937_64 rng(13);
  auto r = WeightedRing::make({"a", "b", "c", "d"});
  std::uniform_int_distribution<int> c(-3, 3);
  for (int it = 0; it < 25; ++it) {
    QMatrix rows;
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) {
      QVector row;
      std::vector<Term> t;
      for (size_t v = 0; v < 4; ++v) {
        row.push_back(c(rng));
        Monomial m(4, 0);
        m[v] = 1;
        t.push_back({m, row.back()});
      }
      rows.push_back(row);
      gens.push_back(Polynomial::from_terms(r, t));
    }
    QVector target;
    std::vector<Term> t;
    for (size_t v = 0; v < 4; ++v) {
      target.push_back(it % 2 ? Rational(c(rng)) : Rational(rows[0][v] * 2 - rows[1][v]));
      Monomial m(4, 0);
      m[v] = 1;
      t.push_back({m, target.back()});
    }
    Polynomial p = Polynomial::from_terms(r, t);
    std::vector<Polynomial> nz;
    for (auto& g : gens)
      if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) continue;
    bool gb_member = normal_form(p, gb_of(nz)).is_zero();
    QMatrix aug = rows;
    aug.push_back(target);
    bool la_member = rank(aug) == rank(rows);
    EXPECT_EQ(gb_member, la_member);
  }
}

TEST(Eliminate, Examples) {
  auto r = WeightedRing::make({"u", "X", "Y"});
  auto out = eliminate({P("X - u", r), P("Y - u^2", r)}, {"u"});
  ASSERT_EQ(out.size(), 1u);
  auto kept = WeightedRing::make({"X", "Y"});
  EXPECT_TRUE(out[0] == P("X^2 - Y", kept) || out[0] == P("Y - X^2", kept));

  auto uv = WeightedRing::make({"u", "v"});
  EXPECT_TRUE(eliminate({P("u*v - 1", uv)}, {"v"}).empty());
  EXPECT_THROW(eliminate({P("u*v - 1", uv)}, {"u", "v"}), Error);
}

TEST(Eliminate, CommutesWithEvaluation) {
  auto r = WeightedRing::make({"t", "X", "Y", "Z"});
  auto out = eliminate({P("X - t^2", r), P("Y - t^3", r), P("Z - t^4 - t", r)}, {"t"});
  ASSERT_FALSE(out.empty());
  for (int t = -3; t <= 3; ++t) {
    std::vector<Rational> pt{Rational(t * t), Rational(t * t * t), Rational(t * t * t * t + t)};
    for (const auto& g : out) EXPECT_EQ(g.evaluate(pt), 0);
  }
}

TEST(PolyGcd, Examples) {
  auto r = xyz();
  EXPECT_EQ(poly_gcd(P("(x - y)*(x + y)", r), P("(x + y)^2", r)), P("x + y", r));
  EXPECT_EQ(poly_gcd(P("x", r), P("y", r)), P("1", r));
  EXPECT_THROW(poly_gcd(Polynomial(r), P("x", r)), Error);
}

TEST(PolyGcd, FactoredRandomInputs) {
  std::mt19937_64 rng(17);
  auto r = xyz();
  for (int it = 0; it < 8; ++it) {
    Polynomial common = random_nonconstant(rng, r, 2, 1);
    Polynomial a = random_nonconstant(rng, r, 2, 1), b = random_nonconstant(rng, r, 2, 1);
    Polynomial f = common * a, g = common * b;
    Polynomial d = poly_gcd(f, g);
    EXPECT_TRUE(try_divide(f, d).has_value());
    EXPECT_TRUE(try_divide(g, d).has_value());
    EXPECT_TRUE(try_divide(d, common).has_value());
  }
}

TEST(ProjectiveEmpty, Examples) {
  auto r = xyz();
  EXPECT_TRUE(projective_empty({P("x", r), P("y", r), P("z", r)}));
  EXPECT_FALSE(projective_empty({P("x", r), P("y", r)}));
  EXPECT_FALSE(projective_empty({P("x", r), P("y^3", r), P("y*z^2", r)}));
  EXPECT_TRUE(projective_empty({P("x", r), P("y^3", r), P("z^3", r)}));
  EXPECT_THROW(projective_empty({P("x + y^2", r)}), Error);
}

TEST(Resultant, Examples) {
  auto r = WeightedRing::make({"v"});
  EXPECT_EQ(resultant(P("v^2 - 2", r), P("v - 1", r), "v"), P("-1", r));
  auto s = WeightedRing::make({"v", "a", "b", "c", "d"});
  EXPECT_EQ(resultant(P("a*v + b", s), P("c*v + d", s), "v"), P("a*d - b*c", s));
  EXPECT_THROW(resultant(P("a", s), P("v", s), "v"), Error);
  // Discriminant of a monic quadratic.
  auto q = WeightedRing::make({"v", "p", "q"});
  EXPECT_EQ(resultant(P("v^2 + p*v + q", q), P("2*v + p", q), "v"), P("4*q - p^2", q));
}
