#pragma once

#include <random>
#include <string>
#include <vector>

#include "stratabench/plane_point.hpp"
#include "stratabench/polynomial.hpp"

namespace strata {

struct HilbertTable {
  std::vector<long long> coefficients;  // index = degree
};

// Coefficients of prod(1 - t^d_j) / prod(1 - t^w_i) through degree `upto`.
HilbertTable ci_hilbert_series(const std::vector<int>& weights,
                               const std::vector<int>& relation_degrees, int upto);

// h^0(mK): p_g for m = 1, chi + m(m-1)/2 K^2 for m >= 2.
long long rr_prediction(long long K2, long long chi, long long pg, long long m);

// P(1,2,2,3,3) with variables x, y1, y2, z1, z2.
const Ring& canonical_ring();

// a1, a2 of degree 2 and b1, b2 of degree 6 in x, y1, y2 (z-free).
struct CanonicalRingModel {
  Polynomial a1, a2, b1, b2;

  Polynomial f1() const;  // z1^2 + z2 x a1 + b1
  Polynomial f2() const;  // z2^2 + z1 x a2 + b2
};

struct CanringValidation {
  bool shape = false;              // degrees and variables as required
  bool coprime = false;            // gcd(b1, b2) = 1
  bool avoids_singular_locus = false;
  std::vector<std::string> diagnostics;
  bool ok() const { return shape && coprime && avoids_singular_locus; }
};

// Throws Error on inhomogeneous input.
CanringValidation validate_canring(const CanonicalRingModel& model);

// Number of distinct points of X over (u0:u1:u2) in the bicanonical image;
// u0 must be nonzero. Throws "non-generic base point" when the fibre is
// not finite.
int bicanonical_fiber_count(const CanonicalRingModel& model, const ProjectivePoint& base);

// Small-integer valid model (resampled until validate_canring passes).
CanonicalRingModel random_canonical_ring_model(std::mt19937_64& rng);

enum class RelativeAutomorphisms { Z2xZ2, Z2, TrivialInGivenCoordinates };
std::string to_string(RelativeAutomorphisms a);
RelativeAutomorphisms classify_relative_automorphisms(const CanonicalRingModel& model);

// P(1,1,2,3) with variables x1, x2, y, z.
const Ring& del_pezzo_ring();

struct DelPezzoModel {
  Rational a0;
  Polynomial a2, a4, a6;  // binary forms in x1, x2 of degrees 2, 4, 6

  Polynomial f6() const;  // z^2 + a0 y^3 + a2 y^2 + a4 y + a6
};

struct DelPezzoReport {
  Polynomial f6;
  HilbertTable anticanonical;  // C[1,1,2,3]/(f6)
  bool anticanonical_matches = false;  // m(m+1)/2 + 1 for m >= 1
  Polynomial restricted;               // z^2 + a6 in C[x1,x2,z]
  HilbertTable restricted_series;      // C[1,1,3]/(6)
  bool restricted_matches = false;     // 2m - 1 for m >= 2
};

DelPezzoReport del_pezzo_report(const DelPezzoModel& model, int upto);

// -(x1^2 - l1 x2^2)(x1^2 - l2 x2^2)(x1^2 - l3 x2^2) in del_pezzo_ring().
Polynomial elliptic_involution_a6(const Rational& l1, const Rational& l2, const Rational& l3);

}  // namespace strata
