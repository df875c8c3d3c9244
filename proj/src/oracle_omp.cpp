#include <omp.h>

#include "cyh/lattice_oracle.hpp"

namespace cyh::kernels {

namespace {

struct FlatFacets {
  std::size_t dim;
  std::size_t count;
  std::vector<std::int64_t> normals;  // count x dim, row-major
  std::vector<std::int64_t> rhs;      // k * offset

  FlatFacets(const HalfSpaceSpec& spec, std::int64_t k)
      : dim(static_cast<std::size_t>(spec.dim())), count(spec.num_facets()) {
    for (const auto& f : spec.facets()) {
      normals.insert(normals.end(), f.normal.begin(), f.normal.end());
      rhs.push_back(k * f.offset);
    }
  }

  // Bit j set when facet j is tight; returns false if x is outside.
  bool classify(const std::int64_t* x, FacetSet& tight) const {
    tight = 0;
    for (std::size_t j = 0; j < count; ++j) {
      const std::int64_t* n = &normals[j * dim];
      std::int64_t lhs = 0;
      for (std::size_t i = 0; i < dim; ++i) lhs += n[i] * x[i];
      if (lhs > rhs[j]) return false;
      if (lhs == rhs[j]) tight |= FacetSet{1} << j;
    }
    return true;
  }
};

bool matches(const RegionSpec& region, FacetSet tight) {
  switch (region.kind) {
    case RegionKind::full: return true;
    case RegionKind::interior: return tight == 0;
    case RegionKind::boundary: return tight != 0;
    case RegionKind::face: return (tight & region.face) == region.face;
  }
  return false;
}

// Visits every point of the slab x[0] == first.
template <typename Visit>
void for_each_in_slab(const BoundingBox& box, std::int64_t first, Visit&& visit) {
  const std::size_t m = box.lo.size();
  std::vector<std::int64_t> x = box.lo;
  x[0] = first;
  for (std::size_t i = 1; i < m; ++i)
    if (box.lo[i] > box.hi[i]) return;
  while (true) {
    visit(x.data());
    std::size_t i = m;
    while (i-- > 1) {
      if (x[i] < box.hi[i]) {
        ++x[i];
        break;
      }
      x[i] = box.lo[i];
    }
    if (i == 0 || i > m) return;
  }
}

}  // namespace

std::uint64_t count_parallel(const HalfSpaceSpec& spec, const BoundingBox& box,
                             std::int64_t k, const RegionSpec& region) {
  const FlatFacets facets(spec, k);
  const std::int64_t lo = box.lo[0];
  const std::int64_t hi = box.hi[0];
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
  for (std::int64_t first = lo; first <= hi; ++first) {
    // a local tally; the shared reduction variable may alias the int64 data
    std::uint64_t slab = 0;
    for_each_in_slab(box, first, [&](const std::int64_t* x) {
      FacetSet tight;
      if (facets.classify(x, tight) && matches(region, tight)) ++slab;
    });
    count += slab;
  }
  return count;
}

TightHistogram histogram_parallel(const HalfSpaceSpec& spec, const BoundingBox& box,
                                  std::int64_t k) {
  const FlatFacets facets(spec, k);
  const std::int64_t lo = box.lo[0];
  const std::int64_t hi = box.hi[0];
  TightHistogram merged;
#pragma omp parallel
  {
    TightHistogram local;
#pragma omp for schedule(dynamic) nowait
    for (std::int64_t first = lo; first <= hi; ++first) {
      for_each_in_slab(box, first, [&](const std::int64_t* x) {
        FacetSet tight;
        if (facets.classify(x, tight)) ++local[tight];
      });
    }
#pragma omp critical(cyh_histogram_merge)
    for (const auto& [set, n] : local) merged[set] += n;
  }
  return merged;
}

}  // namespace cyh::kernels
