#include "cyh/lattice_oracle.hpp"

namespace cyh::kernels {

namespace {

// Advances x through the box in lexicographic order (last coordinate
// fastest). Returns false once the box is exhausted.
bool next_point(std::vector<std::int64_t>& x, const BoundingBox& box) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] < box.hi[i]) {
      ++x[i];
      return true;
    }
    x[i] = box.lo[i];
  }
  return false;
}

FacetSet tight_set(const HalfSpaceSpec& spec, const std::vector<std::int64_t>& x,
                   std::int64_t k) {
  FacetSet tight = 0;
  for (std::size_t j = 0; j < spec.num_facets(); ++j) {
    const auto& f = spec.facet(j);
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += f.normal[i] * x[i];
    if (lhs == k * f.offset) tight |= FacetSet{1} << j;
  }
  return tight;
}

bool box_empty(const BoundingBox& box) {
  for (std::size_t i = 0; i < box.lo.size(); ++i)
    if (box.lo[i] > box.hi[i]) return true;
  return false;
}

}  // namespace

std::uint64_t count_serial(const HalfSpaceSpec& spec, const BoundingBox& box,
                           std::int64_t k, const RegionSpec& region) {
  if (box_empty(box)) return 0;
  std::uint64_t count = 0;
  std::vector<std::int64_t> x = box.lo;
  do {
    const Region where = contains_lattice_point(spec, x, k);
    if (where == Region::outside) continue;
    switch (region.kind) {
      case RegionKind::full: ++count; break;
      case RegionKind::interior: count += where == Region::interior; break;
      case RegionKind::boundary: count += where == Region::boundary; break;
      case RegionKind::face:
        count += (tight_set(spec, x, k) & region.face) == region.face;
        break;
    }
  } while (next_point(x, box));
  return count;
}

TightHistogram histogram_serial(const HalfSpaceSpec& spec, const BoundingBox& box,
                                std::int64_t k) {
  TightHistogram hist;
  if (box_empty(box)) return hist;
  std::vector<std::int64_t> x = box.lo;
  do {
    if (contains_lattice_point(spec, x, k) == Region::outside) continue;
    ++hist[tight_set(spec, x, k)];
  } while (next_point(x, box));
  return hist;
}

}  // namespace cyh::kernels
