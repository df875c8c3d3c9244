#pragma once

#include <string>
#include <vector>

#include "cyh/cy_hilbert.hpp"

namespace cyh {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CrossCheckReport {
  HilbertReport hilbert;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

struct CrossCheckOptions {
  HilbertOptions hilbert;
  int max_k = 5;  // dilations for the reciprocity and inclusion-exclusion checks
};

/// Runs the three-way boundary polynomial computation and every invariant
/// the library promises for a Delzant polytope: face lattice, vertex
/// charts, volume polynomial against independent volumes, series constants,
/// both operator formulas against brute force, reciprocity, and
/// inclusion-exclusion. Validation failures propagate as exceptions; failed
/// invariants are reported, not thrown.
CrossCheckReport cross_check(const HalfSpaceSpec& spec,
                             const CrossCheckOptions& options = {});

}  // namespace cyh
