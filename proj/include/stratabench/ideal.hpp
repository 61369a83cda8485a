#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "stratabench/linalg.hpp"
#include "stratabench/polynomial.hpp"

namespace strata {

class MonomialOrder {
 public:
  enum class Kind { WeightedGrevlex, BlockElimination };

  static MonomialOrder weighted_grevlex() { return MonomialOrder(Kind::WeightedGrevlex, 0); }
  // Variables [0, split) are eliminated; each block is ordered by
  // weighted grevlex restricted to it.
  static MonomialOrder block(size_t split) { return MonomialOrder(Kind::BlockElimination, split); }

  Kind kind() const { return kind_; }
  size_t split() const { return split_; }
  bool greater(const Monomial& a, const Monomial& b, const WeightedRing& ring) const;

 private:
  MonomialOrder(Kind k, size_t split) : kind_(k), split_(split) {}
  Kind kind_;
  size_t split_;
};

struct GbOptions {
  // Maximum number of S-pair reductions before giving up.
  size_t step_budget = 200000;
  // Reads STRATABENCH_STEP_BUDGET when set.
  static GbOptions from_env();
};

class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> gens, bool reduced)
      : ring_(std::move(ring)), order_(order), gens_(std::move(gens)), reduced_(reduced) {}

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool reduced() const { return reduced_; }

  // Leading monomial of a generator in this basis' order.
  Monomial leading_monomial(size_t i) const;

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  bool reduced_;
};

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

// Reduced Gröbner basis: monic generators sorted by increasing leading
// monomial. Throws Error on mixed rings, empty input or budget exhaustion.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GbOptions& options = GbOptions::from_env());

// Full remainder of multivariate division; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Checks the Buchberger criterion on every pair (used by tests/selftests).
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

// Generators of the elimination ideal, living in the subring of kept
// variables (original order and weights).
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::set<std::string>& drop_vars,
                                  const GbOptions& options = GbOptions::from_env());

// Monic gcd via lcm = generator of (f) ∩ (g).
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g,
                    const GbOptions& options = GbOptions::from_env());

// Inputs homogeneous in an all-weights-1 ring.
bool projective_empty(const std::vector<Polynomial>& gens,
                      const GbOptions& options = GbOptions::from_env());

// Coefficients of p as a polynomial in variable v: result[k] is the
// coefficient of v^k (a polynomial free of v, same ring).
std::vector<Polynomial> coefficients_in(const Polynomial& p, size_t v);

// Determinant over the polynomial ring `ring` (Bareiss).
Polynomial determinant(PolyMatrix m, const Ring& ring);

Polynomial sylvester_resultant(const std::vector<Polynomial>& f, const std::vector<Polynomial>& g,
                               const Ring& ring);
// Sylvester resultant with respect to v; both inputs need positive degree
// in v.
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::string_view v);

}  // namespace strata
