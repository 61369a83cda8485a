#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "stratabench/plane_point.hpp"
#include "stratabench/polynomial.hpp"

namespace strata {

struct BuildingData {
  Polynomial D0, D1, D2;  // degrees 1, 3, 3
};

struct BuildingValidation {
  bool degrees = false;
  bool triple_intersection_empty = false;
  bool ok() const { return degrees && triple_intersection_empty; }
};

// Throws Error when the inputs are not homogeneous of degrees (1,3,3).
BuildingValidation validate_building_data(const BuildingData& bd);

enum class LocalClass { BranchSmooth, EllipticDegree1, EllipticDegree4, Other };
std::string to_string(LocalClass c);

struct PointClassification {
  LocalClass tag;
  std::array<unsigned, 3> multiplicities;
  std::string diagnostic;  // set for non-ordinary points
};

// P must lie on D0*D1*D2.
PointClassification classify_point(const BuildingData& bd, const ProjectivePoint& p);

using LabeledMultiplicity = std::pair<std::string, long>;

struct DivisorMultiset {
  std::array<std::vector<LabeledMultiplicity>, 3> lists;
  bool operator==(const DivisorMultiset& o) const { return lists == o.lists; }
};

// Reduce multiplicities mod 2, then move any label shared by two lists to
// the third, until no label is shared. Output lists are sorted by label.
DivisorMultiset normalize_building_data(const DivisorMultiset& d);

const std::vector<std::string>& known_example_names();
BuildingData known_examples(const std::string& name);
// The special point(s) used by each example, with the expected class.
std::vector<std::pair<ProjectivePoint, LocalClass>> known_example_points(const std::string& name);

}  // namespace strata
