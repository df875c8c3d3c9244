#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyh/multipoly.hpp"
#include "cyh/polytope.hpp"

namespace cyh {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Integer box [lo_i, hi_i] enclosing k * F for some face F.
struct BoundingBox {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  /// Number of integer points, saturating at UINT64_MAX.
  std::uint64_t size() const;
};

BoundingBox dilated_box(const FaceLattice& lattice, std::int64_t k,
                        FacetSet face = 0);

enum class RegionKind { full, interior, boundary, face };

struct RegionSpec {
  RegionKind kind = RegionKind::full;
  FacetSet face = 0;  // only for RegionKind::face

  static RegionSpec full() { return {RegionKind::full, 0}; }
  static RegionSpec interior() { return {RegionKind::interior, 0}; }
  static RegionSpec boundary() { return {RegionKind::boundary, 0}; }
  static RegionSpec of_face(FacetSet f) { return {RegionKind::face, f}; }
};

std::string to_string(const RegionSpec& r);

/// Histogram of points of k*Delta by the set of facets they lie on.
using TightHistogram = std::map<FacetSet, std::uint64_t>;

namespace kernels {

// Reference implementations: one point at a time through
// contains_lattice_point, lexicographic order.
std::uint64_t count_serial(const HalfSpaceSpec& spec, const BoundingBox& box,
                           std::int64_t k, const RegionSpec& region);
TightHistogram histogram_serial(const HalfSpaceSpec& spec, const BoundingBox& box,
                                std::int64_t k);

// OpenMP: the box is cut into slabs along the first coordinate.
std::uint64_t count_parallel(const HalfSpaceSpec& spec, const BoundingBox& box,
                             std::int64_t k, const RegionSpec& region);
TightHistogram histogram_parallel(const HalfSpaceSpec& spec, const BoundingBox& box,
                                  std::int64_t k);

}  // namespace kernels

struct OracleOptions {
  std::uint64_t budget = kDefaultBudget;
  bool parallel = true;
};

/// Brute-force count of lattice points of k*Delta in `region`. Face regions
/// count points with equality on every facet of the face; an empty face
/// counts 0. Throws BudgetExceededError before enumerating a box larger than
/// the budget.
std::uint64_t count_points(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                           std::int64_t k, const RegionSpec& region,
                           const OracleOptions& options = {});

struct CountReport {
  std::int64_t k = 0;
  std::uint64_t total = 0;
  std::uint64_t interior = 0;
  std::uint64_t boundary = 0;
  std::map<FacetSet, std::uint64_t> per_face;  // every nonempty proper face
};

CountReport count_report(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                         std::int64_t k, const OracleOptions& options = {});

enum class EhrhartKind { full, interior, boundary, face };

std::string to_string(EhrhartKind kind);

/// Univariate polynomial in k.
struct EhrhartPoly {
  MultiPoly poly{1};
  EhrhartKind kind = EhrhartKind::full;
  FacetSet face = 0;

  Scalar operator()(std::int64_t k) const;
  std::string to_string() const { return to_k_string(poly); }
};

/// Unique polynomial of degree < points.size() through the given (k, value)
/// pairs (Newton divided differences).
MultiPoly interpolate(std::span<const std::pair<std::int64_t, Scalar>> points);

/// Fits counts at k = 1..deg+1 and checks the prediction at k = deg+2
/// (NotPolynomialError on mismatch). deg is m for full/interior, m-1 for
/// boundary, dim F for a face.
EhrhartPoly ehrhart_interpolate(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                                EhrhartKind kind, FacetSet face = 0,
                                const OracleOptions& options = {});

/// Same fit from caller-provided counts; count(k) is invoked for
/// k = 1..degree+2. `what` labels the NotPolynomialError message.
MultiPoly fit_with_prediction(int degree,
                              const std::function<std::uint64_t(std::int64_t)>& count,
                              const std::string& what);

}  // namespace cyh
