#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratabench/linalg.hpp"
#include "stratabench/polynomial.hpp"

namespace strata {

// y^2 = x^3 + a x z^4 + b z^6 on each factor.
struct WeierstrassParams {
  Rational a, b;
  void validate() const;  // 4a^3 + 27b^2 != 0
};

// s4 = alpha t4 + beta t5. Symbolic runs treat alpha, beta as variables.
struct GluingParams {
  Rational alpha, beta;
  bool symbolic = false;
  void validate() const;  // (alpha, beta) != (0, 0)
  bool generic() const { return symbolic || (alpha != 0 && beta != 0); }
};

using Bidegree = std::pair<long, long>;

// Arithmetic in Q[z1,x1,y1] / (f1) (x) Q[z2,x2,y2] / (f2), with weights
// (1,2,3) per factor. Elements are kept y-reduced (y_i exponents <= 1).
// When symbolic, alpha and beta are extra variables of the same ring and
// all linear algebra happens over Q[alpha, beta].
class BiWeierstrass {
 public:
  BiWeierstrass(WeierstrassParams params, GluingParams glue);

  const WeierstrassParams& params() const { return params_; }
  const GluingParams& glue() const { return glue_; }
  const Ring& ring() const { return ring_; }
  const Ring& coefficients() const { return coeffs_; }

  Polynomial var(const std::string& name) const { return Polynomial::variable(ring_, name); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(ring_, c); }
  Polynomial alpha() const;
  Polynomial beta() const;

  Polynomial normal_form(const Polynomial& p) const;
  Polynomial mul(const Polynomial& p, const Polynomial& q) const { return normal_form(p * q); }
  Polynomial power(const Polynomial& p, unsigned n) const;
  // Factor swap.
  Polynomial sigma(const Polynomial& p) const;
  // nullopt unless every term has the same per-factor degrees.
  std::optional<Bidegree> bidegree(const Polynomial& p) const;
  // Restriction to the antidiagonal: (z2,x2,y2) = (z1,x1,-y1), reduced.
  Polynomial antidiagonal(const Polynomial& p) const;

  // Normal-form coordinates: coefficient (in coefficients()) of each
  // monomial in the six curve variables.
  std::map<Monomial, Polynomial> coordinates(const Polynomial& p) const;
  // Columns are the given elements, rows the union of their monomials.
  PolyMatrix coordinate_matrix(const std::vector<Polynomial>& elems) const;
  size_t rank(const std::vector<Polynomial>& elems) const;
  // Kernel of the coordinate matrix.
  std::vector<PolyVector> relations(const std::vector<Polynomial>& elems) const;
  // Combination sum c_i e_i, with c_i from coefficients().
  Polynomial combine(const PolyVector& c, const std::vector<Polynomial>& elems) const;

 private:
  const Polynomial& weierstrass_power(int factor, unsigned n) const;

  WeierstrassParams params_;
  GluingParams glue_;
  Ring ring_, coeffs_;
  std::array<Polynomial, 2> cubic_;
  mutable std::array<std::vector<Polynomial>, 2> cubic_powers_;
};

// {v_i (x) v_i} and {v_i (x) v_j + v_j (x) v_i} for the degree-m basis
// z^i x^j y^k (k <= 1) of one factor. 1 <= m <= 8.
std::vector<Polynomial> invariant_basis(const BiWeierstrass& ctx, int m);

// t0..t6.
std::array<Polynomial, 7> t_generators(const BiWeierstrass& ctx);
const std::array<Bidegree, 7>& t_bidegrees();

// Invariants of bidegree (m,m) vanishing on the antidiagonal. 1 <= m <= 6.
std::vector<Polynomial> antidiagonal_kernel(const BiWeierstrass& ctx, int m);

// Invariants p of bidegree (m,m) with p t4 = s4 h for some invariant h.
// 2 <= m <= 5. Throws "non-generic conductor" when alpha or beta is 0.
std::vector<Polynomial> conductor_vanishing_basis(const BiWeierstrass& ctx, int m);

struct SGenerators {
  std::array<Polynomial, 5> s;
  Polynomial l1, l2;
  // s0^2 s2 - s1^2 - (beta l1 + alpha l2) = scalar_one * t0 s4
  Polynomial scalar_one;
  bool identity_one = false, identity_two = false;
  Polynomial residual_one, residual_two;
};

// Builds s0..s4, l1, l2 and checks both identities; throws with the
// residual when one fails.
SGenerators s_generators(const BiWeierstrass& ctx);
// Same, without throwing.
SGenerators s_generators_unchecked(const BiWeierstrass& ctx);

struct AssignmentTrial {
  std::array<std::string, 5> names;  // images of x, y1, y2, z1, z2
  bool same_ring = false;            // images generate C[s0..s4] in degrees 2, 3
  bool solved = false;               // scalars found with r1 = r2 = 0
  std::optional<Polynomial> lambda_sq, lambda, mu_sq;
  std::string note;
};

struct TheoremReport {
  std::vector<AssignmentTrial> trials;
  std::vector<size_t> successes;  // indices into trials
  bool ok() const { return successes.size() == 1; }
};

// r1 = z1^2 + b1(x,y1,y2), r2 = z2^2 + x z1 a2(x,y1,y2) + b2(x,y1,y2),
// substituted with z1 -> lambda z1, z2 -> mu z2 over every assignment of
// named elements (x -> s0; y's from s1, s2, t1, t2; z's from s3, s4, t3).
// Throws "non-generic conductor" for non-generic glue and "no assignment
// satisfies the relations" when nothing succeeds.
TheoremReport verify_theorem_relations(const BiWeierstrass& ctx);
TheoremReport search_theorem_relations(const BiWeierstrass& ctx);

struct RelationCoefficients {
  Polynomial b1, a2, b2;
};
// b1, a2, b2 evaluated at (x, y1, y2) = (X, Y1, Y2), in normal form.
RelationCoefficients relation_coefficients(const BiWeierstrass& ctx, const Polynomial& X, const Polynomial& Y1,
                                           const Polynomial& Y2);

// Monomials in the given generators of total degree m span all of
// invariant_basis(m), for every m <= upto (<= 6).
bool generation_check(const BiWeierstrass& ctx, int upto);
bool generation_check(const BiWeierstrass& ctx, int upto, const std::vector<size_t>& which_t);

}  // namespace strata
