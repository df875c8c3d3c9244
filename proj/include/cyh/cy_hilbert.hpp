#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyh/lattice_oracle.hpp"
#include "cyh/operators.hpp"
#include "cyh/polytope.hpp"

namespace cyh {

/// Signed contribution of all l-fold intersections F_I, |I| = l.
struct InclusionExclusionTerm {
  int size = 0;
  int sign = 0;
  std::uint64_t face_points = 0;  // sum over |I| = l of #(k F_I)
};

struct InclusionExclusionBreakdown {
  std::int64_t k = 0;
  std::vector<InclusionExclusionTerm> terms;  // l = 1..d
  std::int64_t total = 0;
};

/// sum_{l=1}^{d} (-1)^(l+1) sum_{|I|=l} #(k F_I), iterating every nonempty
/// facet subset; empty intersections contribute 0. Each face count
/// enumerates that face's own bounding box.
InclusionExclusionBreakdown inclusion_exclusion_breakdown(
    const HalfSpaceSpec& spec, const FaceLattice& lattice, std::int64_t k,
    const OracleOptions& options = {});

std::uint64_t inclusion_exclusion_count(const HalfSpaceSpec& spec,
                                        const FaceLattice& lattice, std::int64_t k,
                                        const OracleOptions& options = {});

struct HilbertReport {
  EhrhartPoly by_inclusion_exclusion;
  EhrhartPoly by_operator_formula;
  EhrhartPoly by_oracle;
  bool agree = false;
  std::map<FacetSet, EhrhartPoly> per_face;  // every nonempty proper face
};

struct HilbertOptions {
  OracleOptions oracle;
  /// Replaces the computed series in the operator route.
  std::optional<SeriesTable> series;
};

/// The boundary Ehrhart polynomial three ways. Never throws on
/// disagreement; `agree` records the verdict.
HilbertReport compute_hilbert_report(const HalfSpaceSpec& spec,
                                     const FaceLattice& lattice,
                                     const HilbertOptions& options = {});

/// As compute_hilbert_report, but disagreement raises DisagreementError
/// carrying describe(report).
HilbertReport cy_hilbert_polynomial(const HalfSpaceSpec& spec,
                                    const HilbertOptions& options = {});

std::string describe(const HilbertReport& report);

}  // namespace cyh
