#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "stratabench/graded_models.hpp"
#include "stratabench/ideal.hpp"

using namespace strata;

namespace {

Polynomial C(const char* s) { return parse_polynomial(s, canonical_ring()); }
Polynomial D(const char* s) { return parse_polynomial(s, del_pezzo_ring()); }

CanonicalRingModel diagonal_model() {
  return {C("0"), C("0"), C("y1^3 + x^6"), C("y2^3 + x^6")};
}

// Standard monomials of a GB per degree: the quotient's Hilbert function.
std::vector<long long> hilbert_by_standard_monomials(const GroebnerBasis& gb, int upto) {
  const Ring& R = gb.ring();
  std::vector<Monomial> leads;
  for (size_t i = 0; i < gb.generators().size(); ++i) leads.push_back(gb.leading_monomial(i));
  std::vector<long long> out(upto + 1, 0);
  Monomial m(R->size(), 0);
  std::function<void(size_t, long)> rec = [&](size_t v, long deg) {
    if (v == R->size()) {
      for (const auto& l : leads) {
        bool div = true;
        for (size_t i = 0; i < l.size(); ++i) div &= l[i] <= m[i];
        if (div) return;
      }
      out[deg]++;
      return;
    }
    for (m[v] = 0; deg + static_cast<long>(m[v]) * R->weights()[v] <= upto; ++m[v])
      rec(v + 1, deg + m[v] * R->weights()[v]);
    m[v] = 0;
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST(HilbertSeries, Examples) {
  EXPECT_EQ(ci_hilbert_series({1, 2, 2, 3, 3}, {6, 6}, 6).coefficients,
            (std::vector<long long>{1, 1, 3, 5, 8, 12, 17}));
  auto dp = ci_hilbert_series({1, 1, 2, 3}, {6}, 3).coefficients;
  EXPECT_EQ(dp[1], 2);
  EXPECT_EQ(dp[2], 4);
  EXPECT_EQ(dp[3], 7);
  EXPECT_EQ(ci_hilbert_series({1}, {}, 3).coefficients, (std::vector<long long>{1, 1, 1, 1}));
}

TEST(HilbertSeries, AgreesWithRiemannRoch) {
  auto h = ci_hilbert_series({1, 2, 2, 3, 3}, {6, 6}, 12).coefficients;
  for (int m = 1; m <= 12; ++m) EXPECT_EQ(h[m], rr_prediction(1, 2, 1, m)) << m;
  auto dp = ci_hilbert_series({1, 1, 2, 3}, {6}, 8).coefficients;
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(dp[m], m * (m + 1) / 2 + 1);
}

TEST(HilbertSeries, CrossCheckAgainstStandardMonomials) {
  auto model = diagonal_model();
  auto gb = buchberger({model.f1(), model.f2()}, MonomialOrder::weighted_grevlex());
  auto counted = hilbert_by_standard_monomials(gb, 10);
  EXPECT_EQ(counted, ci_hilbert_series({1, 2, 2, 3, 3}, {6, 6}, 10).coefficients);

  std::mt19937_64 rng(31);
  auto random = random_canonical_ring_model(rng);
  auto gb2 = buchberger({random.f1(), random.f2()}, MonomialOrder::weighted_grevlex());
  EXPECT_EQ(hilbert_by_standard_monomials(gb2, 9), ci_hilbert_series({1, 2, 2, 3, 3}, {6, 6}, 9).coefficients);
}

TEST(RrPrediction, Examples) {
  EXPECT_EQ(rr_prediction(1, 2, 1, 6), 17);
  EXPECT_EQ(rr_prediction(1, 2, 1, 1), 1);
  EXPECT_EQ(rr_prediction(1, 2, 1, 2), 3);
  EXPECT_THROW(rr_prediction(1, 2, 1, 0), Error);
}

TEST(ValidateCanring, Examples) {
  auto ok = validate_canring(diagonal_model());
  EXPECT_TRUE(ok.shape);
  EXPECT_TRUE(ok.coprime);
  EXPECT_TRUE(ok.avoids_singular_locus);

  auto same = validate_canring({C("0"), C("0"), C("y1^3 + x^6"), C("y1^3 + x^6")});
  EXPECT_FALSE(same.coprime);

  auto shared_zero = validate_canring({C("0"), C("0"), C("y1^2*y2 + x^6"), C("y1^3 + x^4*y2")});
  EXPECT_TRUE(shared_zero.coprime);
  EXPECT_FALSE(shared_zero.avoids_singular_locus);
}

TEST(ValidateCanring, WrongDegreeAndInhomogeneous) {
  EXPECT_FALSE(validate_canring({C("x"), C("0"), C("y1^3"), C("y2^3")}).shape);
  EXPECT_FALSE(validate_canring({C("0"), C("0"), C("y1^3 + z1^2"), C("y2^3")}).shape);
  EXPECT_THROW(validate_canring({C("x^2 + y1^2"), C("0"), C("y1^3"), C("y2^3")}), Error);
}

TEST(ValidateCanring, GcdOfRandomModelsIsOne) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 4; ++i) {
    auto m = random_canonical_ring_model(rng);
    EXPECT_TRUE(validate_canring(m).coprime);
  }
}

TEST(FiberCount, Examples) {
  EXPECT_EQ(bicanonical_fiber_count(diagonal_model(), {1, 1, 1}), 4);
  // b1(1, -1, 1) = 0: z1 is forced to 0, leaving z2 = ±sqrt(-2).
  EXPECT_EQ(bicanonical_fiber_count(diagonal_model(), {1, -1, 1}), 2);
  EXPECT_THROW(bicanonical_fiber_count({C("0"), C("0"), C("y1^3 + x^6"), C("y1^3 + x^6")}, {1, 1, 1}),
               Error);
}

TEST(FiberCount, RandomModelsAreQuadrupleCovers) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-20, 20), pos(1, 20);
  for (int i = 0; i < 2; ++i) {
    auto m = random_canonical_ring_model(rng);
    for (int j = 0; j < 3; ++j) {
      int count = 0;
      for (int attempt = 0; attempt < 4 && count != 4; ++attempt)
        count = bicanonical_fiber_count(m, {Rational(pos(rng)), Rational(c(rng)), Rational(c(rng))});
      EXPECT_EQ(count, 4);
    }
  }
}

TEST(Automorphisms, Examples) {
  auto b1 = C("y1^3 + x^6"), b2 = C("y2^3 + x^6");
  EXPECT_EQ(classify_relative_automorphisms({C("0"), C("0"), b1, b2}), RelativeAutomorphisms::Z2xZ2);
  EXPECT_EQ(classify_relative_automorphisms({C("0"), C("y1"), b1, b2}), RelativeAutomorphisms::Z2);
  EXPECT_EQ(classify_relative_automorphisms({C("y1"), C("y2"), b1, b2}),
            RelativeAutomorphisms::TrivialInGivenCoordinates);
  // Rescaling keeps the zero pattern.
  EXPECT_EQ(classify_relative_automorphisms({C("0"), C("-7/3*y1"), C("5*y1^3 + x^6"), b2}),
            RelativeAutomorphisms::Z2);
}

TEST(DelPezzo, Report) {
  DelPezzoModel m{1, D("x1^2"), D("x1^4 + x2^4"), elliptic_involution_a6(1, 2, 3)};
  auto rep = del_pezzo_report(m, 8);
  EXPECT_TRUE(rep.anticanonical_matches);
  EXPECT_TRUE(rep.restricted_matches);
  EXPECT_EQ(rep.anticanonical.coefficients[0], 1);
  EXPECT_EQ(rep.anticanonical.coefficients[1], 2);
  EXPECT_EQ(rep.anticanonical.coefficients[2], 4);
  EXPECT_EQ(rep.anticanonical.coefficients[3], 7);
  EXPECT_EQ(rep.restricted_series.coefficients[2], 3);
  EXPECT_EQ(rep.restricted_series.coefficients[3], 5);
  EXPECT_THROW(del_pezzo_report({1, D("x1"), D("x1^4"), D("x2^6")}, 3), Error);
}

TEST(EllipticInvolution, A6) {
  Polynomial a6 = elliptic_involution_a6(1, 2, 3);
  EXPECT_EQ(a6, D("-(x1^2 - x2^2)*(x1^2 - 2*x2^2)*(x1^2 - 3*x2^2)"));
  for (const auto& t : a6.terms()) EXPECT_EQ(t.exps[0] % 2, 0u);
  Polynomial flipped = substitute(a6, {{"x1", D("-x1")}, {"x2", D("x2")}}, del_pezzo_ring());
  EXPECT_EQ(flipped, a6);
  EXPECT_THROW(elliptic_involution_a6(1, 1, 2), Error);
  EXPECT_THROW(elliptic_involution_a6(0, 1, 2), Error);
}
