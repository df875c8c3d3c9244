#include "cyh/cy_hilbert.hpp"

#include <bit>
#include <sstream>

#include "cyh/errors.hpp"
#include "cyh/volume.hpp"

namespace cyh {

InclusionExclusionBreakdown inclusion_exclusion_breakdown(
    const HalfSpaceSpec& spec, const FaceLattice& lattice, std::int64_t k,
    const OracleOptions& options) {
  const std::size_t d = spec.num_facets();
  InclusionExclusionBreakdown out;
  out.k = k;
  for (std::size_t l = 1; l <= d; ++l)
    out.terms.push_back({static_cast<int>(l), l % 2 == 1 ? 1 : -1, 0});

  if (d > 30)
    throw DimensionError("inclusion-exclusion over 2^" + std::to_string(d) +
                         " facet subsets is not supported");
  const FacetSet end = FacetSet{1} << d;
  for (FacetSet subset = 1; subset < end; ++subset) {
    const std::uint64_t n =
        count_points(spec, lattice, k, RegionSpec::of_face(subset), options);
    out.terms[static_cast<std::size_t>(std::popcount(subset)) - 1].face_points += n;
  }
  for (const auto& t : out.terms)
    out.total += t.sign * static_cast<std::int64_t>(t.face_points);
  return out;
}

std::uint64_t inclusion_exclusion_count(const HalfSpaceSpec& spec,
                                        const FaceLattice& lattice, std::int64_t k,
                                        const OracleOptions& options) {
  const auto b = inclusion_exclusion_breakdown(spec, lattice, k, options);
  if (b.total < 0)
    throw FormulaViolationError("inclusion-exclusion gave a negative count " +
                                std::to_string(b.total));
  return static_cast<std::uint64_t>(b.total);
}

HilbertReport compute_hilbert_report(const HalfSpaceSpec& spec,
                                     const FaceLattice& lattice,
                                     const HilbertOptions& options) {
  const int degree = spec.dim() - 1;
  HilbertReport report;

  report.by_inclusion_exclusion = EhrhartPoly{
      fit_with_prediction(
          degree,
          [&](std::int64_t k) {
            return inclusion_exclusion_count(spec, lattice, k, options.oracle);
          },
          "inclusion-exclusion boundary"),
      EhrhartKind::boundary, 0};

  const VolumePolynomial vol = volume_polynomial(spec, lattice);
  report.by_operator_formula =
      options.series
          ? symbolic_ehrhart(spec, vol, EhrhartKind::boundary, *options.series)
          : symbolic_ehrhart(spec, vol, EhrhartKind::boundary);

  report.by_oracle =
      ehrhart_interpolate(spec, lattice, EhrhartKind::boundary, 0, options.oracle);

  report.agree = report.by_inclusion_exclusion.poly == report.by_oracle.poly &&
                 report.by_operator_formula.poly == report.by_oracle.poly;

  for (const auto& [set, face] : lattice.faces()) {
    if (set == 0) continue;
    report.per_face.emplace(
        set, ehrhart_interpolate(spec, lattice, EhrhartKind::face, set, options.oracle));
  }
  return report;
}

HilbertReport cy_hilbert_polynomial(const HalfSpaceSpec& spec,
                                    const HilbertOptions& options) {
  const FaceLattice lattice = build_face_lattice(spec);
  HilbertReport report = compute_hilbert_report(spec, lattice, options);
  if (!report.agree) throw DisagreementError(describe(report));
  return report;
}

std::string describe(const HilbertReport& report) {
  std::ostringstream os;
  os << "boundary Ehrhart polynomials "
     << (report.agree ? "agree" : "DISAGREE") << ":\n"
     << "  inclusion-exclusion: " << report.by_inclusion_exclusion.to_string() << "\n"
     << "  operator formula:    " << report.by_operator_formula.to_string() << "\n"
     << "  brute force:         " << report.by_oracle.to_string() << "\n";
  return os.str();
}

}  // namespace cyh
