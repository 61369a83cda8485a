#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stratabench/linalg.hpp"
#include "stratabench/rational.hpp"

namespace strata {

struct FibrationData {
  int base_genus = 0;  // 0 or 1
  long deg_L = 0;
  std::vector<long> multiplicities;  // each >= 2
  long k = 1;                        // degree of the multisection
  bool L_torsion = false;            // genus 1, deg_L = 0 only

  void validate() const;  // throws Error
};

// K.E = k(2g - 2 + deg L) + sum (m_i - 1) k / m_i.
Rational k_dot_multisection(const FibrationData& fd);

// h^0 of m(K_B + L) + sum floor(m (m_i - 1) / m_i) p_i on the base curve.
long plurigenus(const FibrationData& fd, long m);

struct MultipleFibreSolution {
  long k;
  std::vector<long> multiplicities;  // ascending
  bool operator==(const MultipleFibreSolution&) const = default;
};

// All solutions of k(-1 + sum (m_i - 1)/m_i) = 1 with k_min <= k <= bound
// and 2 <= m_i <= bound. Without r_fixed every fibre count is searched
// (r >= 5 has no solutions).
std::vector<MultipleFibreSolution> solve_multiple_fibres(long k_min, std::optional<long> r_fixed, long bound);

// Symmetric rational intersection pairing on a fixed basis.
struct LatticeClass {
  std::vector<Rational> coords;
  std::shared_ptr<const QMatrix> pairing;

  LatticeClass operator+(const LatticeClass& o) const;
  LatticeClass operator-(const LatticeClass& o) const;
  LatticeClass operator*(const Rational& c) const;
  Rational dot(const LatticeClass& o) const;
  bool is_zero() const;
};

std::shared_ptr<const QMatrix> make_pairing(QMatrix m);  // throws unless symmetric

struct BiellipticRow {
  int type_index;
  std::string group;
  long gamma;
  std::vector<long> multiplicities;
  long mu;
};

const std::vector<BiellipticRow>& bielliptic_table();

struct BiellipticAdmissibility {
  bool admissible;
  Rational mu_over_gamma;
  std::optional<std::pair<long, long>> witness;  // (a, b) with E1 = aA/mu, E2 = b(mu/gamma)B
};

// Throws when the row is not one of the seven table rows.
BiellipticAdmissibility bielliptic_admissible(const BiellipticRow& row);

struct HirzebruchSolution {
  Rational k;
  bool rewriting_holds;  // (4C0 + 7F) - 7(C0 + F) + 3C0 = 0
  bool pencil_disjoint;  // (C0 + F).C0 = 0
};

// Branch class -2C0 - (k/2)F on F1 with chi = 3.
HirzebruchSolution hirzebruch_branch_solve();

struct NormalStratumRow {
  std::string kappa;
  std::vector<long> pattern;  // 0 means an arbitrary degree
  long chi_tilde;
  std::string type;
  bool unresolved = false;
};

const std::vector<NormalStratumRow>& normal_strata();

struct ChiReport {
  long r;
  long chi_tilde;
  bool degrees_bounded;         // every d_i <= 4
  std::vector<std::string> matches;
  bool valid;
};

ChiReport chi_bookkeeping(long chi_X, const std::vector<long>& degrees);

struct StratumEntry {
  std::string name;
  bool normal;
  std::string description;
  std::vector<long> dimensions;  // empty when not computed
};

struct StratumCatalog {
  std::vector<StratumEntry> rows;
  long total_moduli_dimension;
};

StratumCatalog stratum_catalog();

}  // namespace strata
