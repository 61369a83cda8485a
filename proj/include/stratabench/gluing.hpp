#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "stratabench/poly_json.hpp"
#include "stratabench/rational.hpp"

namespace strata {

struct MarkedComponent {
  int genus = 0;
  std::vector<std::string> marks;
};

// Components of the normalised double curve; each matching pair is the two
// preimages of one node.
struct MarkedConfig {
  std::vector<MarkedComponent> components;
  std::vector<std::pair<std::string, std::string>> matching;

  void validate() const;  // throws Error
  long nodes() const { return static_cast<long>(matching.size()); }
};

struct GluingInvolution {
  std::vector<size_t> component_map;
  std::map<std::string, std::string> mark_map;
  std::vector<int> fixed_point_counts;  // per component, 0 unless self-mapped

  bool operator==(const GluingInvolution&) const = default;
};

// Throws Error unless inv is an involution of config satisfying the
// Gorenstein condition (no fixed marks) with admissible fixed-point counts.
void validate_involution(const MarkedConfig& config, const GluingInvolution& inv);

// Number of fixed points of an involution of a genus g curve: 2g + 2 - 4h
// for each possible quotient genus h.
std::vector<int> admissible_fixed_point_counts(int genus);

// Node classes, each a sorted list of indices into config.matching; the
// classes themselves sorted.
using CuspPartition = std::vector<std::vector<size_t>>;

CuspPartition cusp_classes(const MarkedConfig& config, const GluingInvolution& inv);

struct ChiCheck {
  long chi_bar;  // sum (1 - g_i) - mu_bar
  long mu_bar;
  long rho;
  long mu1;
  Rational chi_D;       // (chi_bar - mu_bar)/2 + rho/4 + mu1
  bool relation_holds;  // mu_bar = rho/2 + 2 mu1
  bool holds;           // chi_D = -1
};

ChiCheck chi_check(const MarkedConfig& config, const GluingInvolution& inv);

// A fixed-point-free involution mapping every node to a node descends to
// an etale double cover of the double curve, which a plane quartic cannot
// have.
bool descends_etale(const MarkedConfig& config, const GluingInvolution& inv);
std::string feasibility(const MarkedConfig& config, const GluingInvolution& inv);  // "feasible" | "excluded-etale-quotient"

// Symmetries are permutations of marks, given as mark -> mark (missing marks
// are fixed); each must respect components, genera and the matching.
using MarkPermutation = std::map<std::string, std::string>;

struct GluingOrbit {
  GluingInvolution representative;
  CuspPartition cusps;
  ChiCheck chi;
  std::string feasibility;
  size_t size;  // enumerated candidates in this orbit
};

struct GluingEnumeration {
  size_t candidates = 0;  // Gorenstein involutions
  size_t passing = 0;     // of those, passing chi_check
  std::vector<GluingOrbit> orbits;
};

GluingEnumeration enumerate_gluings(const MarkedConfig& config, const std::vector<MarkPermutation>& symmetry);

// All involutions satisfying the Gorenstein condition, before the chi filter.
std::vector<GluingInvolution> gorenstein_involutions(const MarkedConfig& config);

// Lexicographically minimal conjugate under the group generated by symmetry.
GluingInvolution canonical_form(const MarkedConfig& config, const std::vector<MarkPermutation>& symmetry,
                                const GluingInvolution& inv);

GluingInvolution conjugate(const MarkedConfig& config, const MarkPermutation& g, const GluingInvolution& inv);

struct QuarticFlags {
  bool collinear_triple = false;
  bool irreducible = false;
};

struct QuarticCase {
  long node_count;
  bool reducible;
  std::string description;
  bool flags_consistent;  // the caller's flags agree with the table
};

// Structure of a nodal plane quartic from its node count. Throws
// "exceeds quartic bound" above 6.
QuarticCase quartic_case_table(long node_count, QuarticFlags flags = {});

struct MinimumNodesReport {
  // For mu_bar = 0..3: Gorenstein candidates, those passing chi_check, and
  // those left after the etale exclusion.
  std::vector<std::array<size_t, 3>> counts;
  long minimum;
};

MinimumNodesReport minimum_nodes_report();
long minimum_nodes_check();

// Built-in configurations with their symmetry generators.
struct NamedConfig {
  MarkedConfig config;
  std::vector<MarkPermutation> symmetry;
};

const std::vector<std::string>& builtin_config_names();
NamedConfig builtin_config(const std::string& name);

MarkedConfig config_from_json(const json& j);
std::vector<MarkPermutation> symmetry_from_json(const json& j);  // j["symmetry"], may be absent
json to_json(const MarkedConfig& config);
json to_json(const MarkedConfig& config, const GluingInvolution& inv);
json to_json(const MarkedConfig& config, const GluingEnumeration& e);

}  // namespace strata
