#include "cyh/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "cyh/errors.hpp"

namespace cyh {

std::vector<std::size_t> facet_indices(FacetSet set) {
  std::vector<std::size_t> out;
  while (set != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(set)));
    set &= set - 1;
  }
  return out;
}

FacetSet make_facet_set(std::span<const std::size_t> indices) {
  FacetSet s = 0;
  for (auto i : indices) {
    if (i >= kMaxFacets) throw std::out_of_range("facet index exceeds 64");
    s |= FacetSet{1} << i;
  }
  return s;
}

std::string facet_set_string(FacetSet set) {
  std::string out = "{";
  bool first = true;
  for (auto i : facet_indices(set)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

namespace {

std::string point_string(std::span<const Scalar> p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += p[i].to_string();
  }
  return out + ")";
}

Scalar dot(std::span<const std::int64_t> n, std::span<const Scalar> x) {
  Scalar s(0);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] != 0) s += Scalar(n[i]) * x[i];
  return s;
}

// Calls fn(set) for every subset of {0..n-1} of size k.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(make_facet_set(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t normal_rank(const HalfSpaceSpec& spec) {
  IntMatrix all = spec.normal_matrix((spec.num_facets() == 64)
                                         ? ~FacetSet{0}
                                         : (FacetSet{1} << spec.num_facets()) - 1);
  IntMatrix transposed(all.cols(), all.rows());
  for (std::size_t i = 0; i < all.rows(); ++i)
    for (std::size_t j = 0; j < all.cols(); ++j) transposed(j, i) = all(i, j);
  // kernel of N^T has dimension d - rank
  return all.rows() - integer_kernel_basis(transposed).cols();
}

}  // namespace

HalfSpaceSpec::HalfSpaceSpec(int dim, std::vector<Facet> facets, std::string name)
    : dim_(dim), facets_(std::move(facets)), name_(std::move(name)) {
  if (dim_ < 1) throw DimensionError("polytope dimension must be >= 1");
  if (facets_.size() < static_cast<std::size_t>(dim_) + 1)
    throw DimensionError("need at least " + std::to_string(dim_ + 1) +
                         " facets in dimension " + std::to_string(dim_) +
                         ", got " + std::to_string(facets_.size()));
  if (facets_.size() > kMaxFacets)
    throw DimensionError("at most 64 facets supported");
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const auto& n = facets_[i].normal;
    if (n.size() != static_cast<std::size_t>(dim_))
      throw DimensionError("facet " + std::to_string(i + 1) + " normal has " +
                           std::to_string(n.size()) + " entries, need " +
                           std::to_string(dim_));
    std::int64_t g = 0;
    for (auto v : n) g = std::gcd(g, v);
    if (g == 0)
      throw DimensionError("facet " + std::to_string(i + 1) + " has zero normal");
    if (g != 1)
      throw DimensionError("facet " + std::to_string(i + 1) +
                           " normal is not primitive (gcd " + std::to_string(g) +
                           ")");
  }
}

std::vector<Scalar> HalfSpaceSpec::anchor() const {
  std::vector<Scalar> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.emplace_back(f.offset);
  return out;
}

IntMatrix HalfSpaceSpec::normal_matrix(FacetSet set) const {
  auto rows = facet_indices(set);
  IntMatrix m(rows.size(), static_cast<std::size_t>(dim_));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = Integer(static_cast<long>(facets_.at(rows[r]).normal[c]));
  return m;
}

std::vector<Scalar> VertexChart::at(std::span<const Scalar> offsets) const {
  std::vector<Scalar> rhs;
  rhs.reserve(facets.size());
  for (auto i : facets) rhs.push_back(offsets[i]);
  return multiply(inverse, rhs);
}

std::vector<MultiPoly> VertexChart::symbolic(std::size_t num_facets) const {
  std::vector<MultiPoly> coords;
  for (std::size_t r = 0; r < inverse.rows(); ++r) {
    MultiPoly form(num_facets);
    for (std::size_t t = 0; t < facets.size(); ++t)
      form += inverse(r, t) * MultiPoly::variable(num_facets, facets[t]);
    coords.push_back(std::move(form));
  }
  return coords;
}

IntMatrix VertexChart::primitive_edges() const {
  const std::size_t m = inverse.rows();
  IntMatrix edges(m, m);
  for (std::size_t t = 0; t < m; ++t) {
    // Leaving facet t: direction e with N e = -unit_t, i.e. -column t.
    Integer lcm(1);
    for (std::size_t r = 0; r < m; ++r) {
      Integer den = inverse(r, t).denominator();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Integer> v(m);
    Integer g(0);
    for (std::size_t r = 0; r < m; ++r) {
      Scalar scaled = -inverse(r, t) * Scalar(lcm);
      v[r] = scaled.numerator();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[r].get_mpz_t());
    }
    for (std::size_t r = 0; r < m; ++r) edges(t, r) = v[r] / g;
  }
  return edges;
}

std::vector<VertexChart> enumerate_vertices(const HalfSpaceSpec& spec,
                                            std::span<const Scalar> offsets) {
  const auto m = static_cast<std::size_t>(spec.dim());
  const std::size_t d = spec.num_facets();
  if (offsets.size() != d)
    throw DimensionError("enumerate_vertices: " + std::to_string(offsets.size()) +
                         " offsets for " + std::to_string(d) + " facets");

  std::map<std::vector<Scalar>, FacetSet> found;
  for_each_combination(d, m, [&](FacetSet set) {
    IntMatrix n = spec.normal_matrix(set);
    if (int_det(n) == 0) return;
    auto inverse = rational_inverse(to_rational(n));
    std::vector<Scalar> rhs;
    for (auto i : facet_indices(set)) rhs.push_back(offsets[i]);
    std::vector<Scalar> x = multiply(*inverse, rhs);
    if (found.contains(x)) return;
    FacetSet active = 0;
    for (std::size_t j = 0; j < d; ++j) {
      Scalar lhs = dot(spec.facet(j).normal, x);
      if (lhs > offsets[j]) return;
      if (lhs == offsets[j]) active |= FacetSet{1} << j;
    }
    found.emplace(std::move(x), active);
  });

  if (found.empty()) {
    if (normal_rank(spec) < m)
      throw UnboundedError("facet normals do not span R^" + std::to_string(m) +
                           "; the region contains a line or is empty");
    throw EmptyError("no feasible vertex: the polytope is empty");
  }

  std::vector<VertexChart> charts;
  FacetSet touched = 0;
  for (auto& [x, active] : found) {
    if (static_cast<std::size_t>(std::popcount(active)) > m) {
      throw NonSimpleError("vertex " + point_string(x) + " lies on " +
                           std::to_string(std::popcount(active)) + " facets " +
                           facet_set_string(active) + ", expected " +
                           std::to_string(m));
    }
    VertexChart c;
    c.active = active;
    c.facets = facet_indices(active);
    c.normals = spec.normal_matrix(active);
    c.det = int_det(c.normals);
    c.inverse = *rational_inverse(to_rational(c.normals));
    c.point = x;
    touched |= active;
    charts.push_back(std::move(c));
  }

  // A pointed polyhedron is bounded iff no edge leaving a vertex is a ray.
  for (const auto& c : charts) {
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<Scalar> dir(m);
      for (std::size_t r = 0; r < m; ++r) dir[r] = -c.inverse(r, t);
      bool blocked = false;
      for (std::size_t j = 0; j < d && !blocked; ++j)
        if (!(c.active >> j & 1) && dot(spec.facet(j).normal, dir).sign() > 0)
          blocked = true;
      if (!blocked)
        throw UnboundedError("unbounded edge at vertex " + point_string(c.point) +
                             " leaving facet " +
                             std::to_string(c.facets[t] + 1));
    }
  }

  for (std::size_t j = 0; j < d; ++j)
    if (!(touched >> j & 1))
      throw RedundantFacetError("facet " + std::to_string(j + 1) +
                                " contains no vertex (redundant inequality)");

  // Simple and nonempty at a vertex implies full-dimensional.
  return charts;
}

std::vector<VertexChart> enumerate_vertices(const HalfSpaceSpec& spec) {
  const auto offsets = spec.anchor();
  return enumerate_vertices(spec, offsets);
}

DelzantReport validate_delzant(const std::vector<VertexChart>& vertices) {
  DelzantReport report;
  for (const auto& v : vertices) {
    if (abs(Scalar(v.det)) != Scalar(1)) {
      report.passed = false;
      report.failures.push_back({v.point, v.active, v.det});
    }
  }
  return report;
}

DelzantReport validate_delzant(const HalfSpaceSpec& spec) {
  return validate_delzant(enumerate_vertices(spec));
}

FaceLattice::FaceLattice(int dim, std::size_t num_facets,
                         std::vector<VertexChart> vertices)
    : dim_(dim), num_facets_(num_facets), vertices_(std::move(vertices)) {
  for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
    const FacetSet active = vertices_[vi].active;
    // Every subset of a simple vertex's active set is the full active set of
    // a face through that vertex.
    FacetSet sub = active;
    while (true) {
      auto [it, inserted] = faces_.try_emplace(sub);
      if (inserted) {
        it->second.active = sub;
        it->second.dim = dim_ - std::popcount(sub);
      }
      it->second.vertices.push_back(vi);
      if (sub == 0) break;
      sub = (sub - 1) & active;
    }
  }
}

const FaceRecord* FaceLattice::resolve(FacetSet set) const {
  auto it = faces_.find(set);
  return it == faces_.end() ? nullptr : &it->second;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dim_) + 1, 0);
  for (const auto& [set, face] : faces_) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

std::int64_t FaceLattice::euler_sum() const {
  std::int64_t s = 0;
  for (const auto& [set, face] : faces_) s += (face.dim % 2 == 0) ? 1 : -1;
  return s;
}

FaceLattice build_face_lattice(const HalfSpaceSpec& spec) {
  auto vertices = enumerate_vertices(spec);
  auto report = validate_delzant(vertices);
  if (!report.passed) {
    std::ostringstream msg;
    msg << "not Delzant:";
    for (const auto& f : report.failures)
      msg << " vertex " << point_string(f.vertex) << " det " << f.det.get_str()
          << ";";
    throw NotDelzantError(msg.str());
  }
  return FaceLattice(spec.dim(), spec.num_facets(), std::move(vertices));
}

std::string to_string(Region r) {
  switch (r) {
    case Region::interior: return "interior";
    case Region::boundary: return "boundary";
    case Region::outside: return "outside";
  }
  return "?";
}

Region contains_lattice_point(const HalfSpaceSpec& spec,
                              std::span<const std::int64_t> x, std::int64_t k) {
  if (x.size() != static_cast<std::size_t>(spec.dim()))
    throw DimensionError("contains_lattice_point: point has " +
                         std::to_string(x.size()) + " coordinates, need " +
                         std::to_string(spec.dim()));
  bool tight = false;
  for (const auto& f : spec.facets()) {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < x.size(); ++i) lhs += f.normal[i] * x[i];
    const std::int64_t rhs = k * f.offset;
    if (lhs > rhs) return Region::outside;
    if (lhs == rhs) tight = true;
  }
  return tight ? Region::boundary : Region::interior;
}

}  // namespace cyh
