#include "cyh/lattice_oracle.hpp"

#include <limits>

#include "cyh/errors.hpp"

namespace cyh {

namespace {

std::int64_t floor_of(const Scalar& s) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
  return q.get_si();
}

std::int64_t ceil_of(const Scalar& s) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
  return q.get_si();
}

std::uint64_t enumerate_guard(const BoundingBox& box, const OracleOptions& options) {
  const std::uint64_t size = box.size();
  if (size > options.budget) throw BudgetExceededError(size, options.budget);
  return size;
}

}  // namespace

std::uint64_t BoundingBox::size() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    const auto extent = static_cast<std::uint64_t>(hi[i] - lo[i]) + 1;
    if (total > std::numeric_limits<std::uint64_t>::max() / extent)
      return std::numeric_limits<std::uint64_t>::max();
    total *= extent;
  }
  return total;
}

BoundingBox dilated_box(const FaceLattice& lattice, std::int64_t k, FacetSet face) {
  const auto m = static_cast<std::size_t>(lattice.dim());
  BoundingBox box{std::vector<std::int64_t>(m, 0), std::vector<std::int64_t>(m, -1)};
  const FaceRecord* rec = lattice.resolve(face);
  if (rec == nullptr) return box;
  for (std::size_t i = 0; i < m; ++i) {
    Scalar lo, hi;
    bool init = false;
    for (auto vi : rec->vertices) {
      const Scalar c = lattice.vertices()[vi].point[i] * Scalar(k);
      if (!init || c < lo) lo = c;
      if (!init || c > hi) hi = c;
      init = true;
    }
    box.lo[i] = ceil_of(lo);
    box.hi[i] = floor_of(hi);
  }
  return box;
}

std::string to_string(const RegionSpec& r) {
  switch (r.kind) {
    case RegionKind::full: return "full";
    case RegionKind::interior: return "interior";
    case RegionKind::boundary: return "boundary";
    case RegionKind::face: {
      // same syntax the command line accepts
      const auto braces = facet_set_string(r.face);
      return "face:" + braces.substr(1, braces.size() - 2);
    }
  }
  return "?";
}

std::string to_string(EhrhartKind kind) {
  switch (kind) {
    case EhrhartKind::full: return "full";
    case EhrhartKind::interior: return "interior";
    case EhrhartKind::boundary: return "boundary";
    case EhrhartKind::face: return "face";
  }
  return "?";
}

std::uint64_t count_points(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                           std::int64_t k, const RegionSpec& region,
                           const OracleOptions& options) {
  if (k < 1) throw std::invalid_argument("count_points: k must be positive");
  FacetSet box_face = 0;
  if (region.kind == RegionKind::face) {
    if (lattice.resolve(region.face) == nullptr) return 0;
    box_face = region.face;
  }
  const BoundingBox box = dilated_box(lattice, k, box_face);
  enumerate_guard(box, options);
  return options.parallel ? kernels::count_parallel(spec, box, k, region)
                          : kernels::count_serial(spec, box, k, region);
}

CountReport count_report(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                         std::int64_t k, const OracleOptions& options) {
  if (k < 1) throw std::invalid_argument("count_report: k must be positive");
  const BoundingBox box = dilated_box(lattice, k);
  enumerate_guard(box, options);
  const TightHistogram hist = options.parallel
                                  ? kernels::histogram_parallel(spec, box, k)
                                  : kernels::histogram_serial(spec, box, k);
  CountReport report;
  report.k = k;
  for (const auto& [tight, n] : hist) {
    report.total += n;
    if (tight == 0) report.interior += n;
  }
  report.boundary = report.total - report.interior;
  for (const auto& [face, rec] : lattice.faces()) {
    if (face == 0) continue;
    std::uint64_t n = 0;
    for (const auto& [tight, c] : hist)
      if ((tight & face) == face) n += c;
    report.per_face[face] = n;
  }
  return report;
}

Scalar EhrhartPoly::operator()(std::int64_t k) const {
  const Scalar at[] = {Scalar(k)};
  return poly.evaluate(at);
}

MultiPoly interpolate(std::span<const std::pair<std::int64_t, Scalar>> points) {
  const std::size_t n = points.size();
  std::vector<Scalar> coef;
  for (const auto& p : points) coef.push_back(p.second);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) /
                Scalar(points[i].first - points[i - level].first);

  const MultiPoly k = MultiPoly::variable(1, 0);
  MultiPoly result(1);
  MultiPoly basis = MultiPoly::constant(1, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    result += coef[i] * basis;
    basis = basis * (k - MultiPoly::constant(1, Scalar(points[i].first)));
  }
  return result;
}

MultiPoly fit_with_prediction(int degree,
                              const std::function<std::uint64_t(std::int64_t)>& count,
                              const std::string& what) {
  std::vector<std::pair<std::int64_t, Scalar>> samples;
  for (std::int64_t k = 1; k <= degree + 1; ++k)
    samples.emplace_back(k, Scalar(static_cast<std::int64_t>(count(k))));
  MultiPoly poly = interpolate(samples);
  const std::int64_t check = degree + 2;
  const Scalar predicted = poly.evaluate(std::vector<Scalar>{Scalar(check)});
  const Scalar actual(static_cast<std::int64_t>(count(check)));
  if (predicted != actual)
    throw NotPolynomialError(what + ": degree-" + std::to_string(degree) +
                             " fit " + to_k_string(poly) + " predicts " +
                             predicted.to_string() + " at k=" +
                             std::to_string(check) + ", counted " +
                             actual.to_string());
  return poly;
}

EhrhartPoly ehrhart_interpolate(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                                EhrhartKind kind, FacetSet face,
                                const OracleOptions& options) {
  int degree = spec.dim();
  RegionSpec region = RegionSpec::full();
  switch (kind) {
    case EhrhartKind::full: break;
    case EhrhartKind::interior: region = RegionSpec::interior(); break;
    case EhrhartKind::boundary:
      region = RegionSpec::boundary();
      degree = spec.dim() - 1;
      break;
    case EhrhartKind::face: {
      const FaceRecord* rec = lattice.resolve(face);
      if (rec == nullptr) return EhrhartPoly{MultiPoly(1), kind, face};
      region = RegionSpec::of_face(face);
      degree = rec->dim;
      break;
    }
  }
  MultiPoly poly = fit_with_prediction(
      degree,
      [&](std::int64_t k) { return count_points(spec, lattice, k, region, options); },
      to_string(region) + " Ehrhart");
  return EhrhartPoly{std::move(poly), kind, kind == EhrhartKind::face ? face : 0};
}

}  // namespace cyh
