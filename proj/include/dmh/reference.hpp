#pragma once

// Published reference values, kept as text exactly as tabulated.

#include "dmh/hurwitz.hpp"

#include <array>
#include <string>
#include <vector>

namespace dmh {

struct ReferenceCell {
  Family family;
  int g;
  std::string mu;              // "(3,1)"
  std::string times_mu_value;  // mu_1...mu_n times the value
};

struct ReferenceWeingarten {
  std::string sigma;  // cycle notation; "" for the empty permutation
  int k;
  std::string unitary;
  std::string grassmannian;
};

struct ReferenceRootRow {
  int g;
  std::string mu;
  std::array<std::string, 6> roots;  // ascending decimals
};

/// Monotone g <= 3 and dessin g <= 1.
const std::vector<ReferenceCell>& reference_hurwitz_cells();
/// Wg^U and Wg^S for k <= 4.
const std::vector<ReferenceWeingarten>& reference_weingarten();
/// Roots of H_g(4,2,1), g = 10..20.
const std::vector<ReferenceRootRow>& reference_root_rows_421();
/// Roots of H_20(mu) over all |mu| = 7.
const std::vector<ReferenceRootRow>& reference_root_rows_weight7();

}  // namespace dmh
