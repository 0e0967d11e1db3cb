#pragma once

#include "symharm/harmonic.hpp"

#include <string>
#include <vector>

namespace symharm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exact operator identities at one symplectic point: star involution, the
// dimension-2 anchors, the product rule across a 2+4 split, the sl(2)
// commutation relations, the Lefschetz power isomorphisms on forms, delta^2=0,
// the two routes to the dual Lefschetz operator, the bracket form of delta,
// the pairing characterization of the star, and the restriction of the
// harmonic-form isomorphism to invariant forms.
std::vector<CheckResult> operator_suite(const LieAlgebraSpec& spec,
                                        const Form& omega, std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace symharm
