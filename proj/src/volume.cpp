#include "cyh/volume.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cyh/errors.hpp"

namespace cyh {

namespace {

// Graded-lex on rational coordinates: coordinate sum first, then lex.
bool graded_lex_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar sa(0), sb(0);
  for (const auto& x : a) sa += x;
  for (const auto& x : b) sb += x;
  if (sa != sb) return sa < sb;
  return a < b;
}

std::size_t pick_apex(const std::vector<std::size_t>& candidates,
                      std::span<const std::vector<Scalar>> coords, ApexRule rule) {
  std::size_t best = candidates.front();
  for (auto v : candidates) {
    bool better = rule == ApexRule::least ? graded_lex_less(coords[v], coords[best])
                                          : graded_lex_less(coords[best], coords[v]);
    if (better) best = v;
  }
  return best;
}

void triangulate_rec(const FaceLattice& lattice, const FaceRecord& face,
                     std::span<const std::vector<Scalar>> coords, ApexRule rule,
                     std::vector<std::vector<std::size_t>>& out) {
  if (face.dim == 0) {
    out.push_back({face.vertices.front()});
    return;
  }
  const std::size_t apex = pick_apex(face.vertices, coords, rule);
  for (std::size_t j = 0; j < lattice.num_facets(); ++j) {
    if (face.active >> j & 1) continue;
    const FaceRecord* sub = lattice.resolve(face.active | (FacetSet{1} << j));
    if (sub == nullptr) continue;
    if (std::find(sub->vertices.begin(), sub->vertices.end(), apex) !=
        sub->vertices.end())
      continue;
    std::vector<std::vector<std::size_t>> part;
    triangulate_rec(lattice, *sub, coords, rule, part);
    for (auto& simplex : part) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
}

Scalar simplex_volume_times_factorial(const std::vector<std::size_t>& simplex,
                                      std::span<const std::vector<Scalar>> coords) {
  const std::size_t k = simplex.size() - 1;
  const auto& base = coords[simplex[0]];
  RatMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      m(r, c) = coords[simplex[r + 1]][c] - base[c];
  return abs(rational_det(m));
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(
    const FaceLattice& lattice, FacetSet face,
    std::span<const std::vector<Scalar>> coords, ApexRule rule) {
  const FaceRecord* rec = lattice.resolve(face);
  if (rec == nullptr) return {};
  std::vector<std::vector<std::size_t>> out;
  triangulate_rec(lattice, *rec, coords, rule, out);
  return out;
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DimensionError("poly_det: empty matrix");
  const std::size_t vars = m[0][0].num_vars();
  if (n == 1) return m[0][0];
  MultiPoly sum(vars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][c] * poly_det(minor);
    if (c % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

VolumePolynomial volume_polynomial(const HalfSpaceSpec& spec,
                                   const FaceLattice& lattice, ApexRule rule) {
  const auto m = static_cast<std::size_t>(spec.dim());
  const std::size_t d = spec.num_facets();
  const auto anchor = spec.anchor();

  std::vector<std::vector<Scalar>> anchors;
  std::vector<std::vector<MultiPoly>> symbolic;
  for (const auto& v : lattice.vertices()) {
    anchors.push_back(v.at(anchor));
    symbolic.push_back(v.symbolic(d));
  }

  MultiPoly total(d);
  for (const auto& simplex : triangulate(lattice, 0, anchors, rule)) {
    std::vector<std::vector<MultiPoly>> rows;
    RatMatrix at_anchor(m, m);
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t c = 0; c < m; ++c) {
        row.push_back(symbolic[simplex[r + 1]][c] - symbolic[simplex[0]][c]);
        at_anchor(r, c) = anchors[simplex[r + 1]][c] - anchors[simplex[0]][c];
      }
      rows.push_back(std::move(row));
    }
    const int sign = rational_det(at_anchor).sign();
    if (sign == 0) {
      std::string ids;
      for (auto v : simplex) ids += " " + std::to_string(v);
      throw DegenerateTriangulationError(
          "simplex with vertices" + ids + " is flat at lambda^0");
    }
    MultiPoly det = poly_det(rows);
    if (sign > 0)
      total += det;
    else
      total -= det;
  }
  total *= Scalar(Integer(1), factorial(static_cast<unsigned>(m)));
  return VolumePolynomial{std::move(total), spec.dim(), anchor};
}

BoundaryVolumePolynomial boundary_volume_polynomial(const VolumePolynomial& v) {
  BoundaryVolumePolynomial b;
  b.poly = MultiPoly(v.poly.num_vars());
  for (std::size_t i = 0; i < v.poly.num_vars(); ++i) {
    b.per_facet.push_back(differentiate(v.poly, i));
    b.poly += b.per_facet.back();
  }
  return b;
}

Scalar numeric_volume_at(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                         std::span<const Scalar> sample) {
  std::vector<VertexChart> charts;
  try {
    charts = enumerate_vertices(spec, sample);
  } catch (const ValidationError& e) {
    throw ChamberCrossedError(std::string("sample changes the polytope: ") +
                              e.what());
  }
  std::set<FacetSet> here, there;
  for (const auto& c : charts) here.insert(c.active);
  for (const auto& c : lattice.vertices()) there.insert(c.active);
  if (here != there)
    throw ChamberCrossedError("vertex/facet incidences differ from lambda^0");

  FaceLattice fresh(spec.dim(), spec.num_facets(), std::move(charts));
  std::vector<std::vector<Scalar>> coords;
  for (const auto& c : fresh.vertices()) coords.push_back(c.point);

  Scalar total(0);
  for (const auto& simplex : triangulate(fresh, 0, coords, ApexRule::greatest))
    total += simplex_volume_times_factorial(simplex, coords);
  return total / Scalar(factorial(static_cast<unsigned>(spec.dim())));
}

Scalar lattice_face_volume(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                           FacetSet face) {
  const FaceRecord* rec = lattice.resolve(face);
  if (rec == nullptr) return Scalar(0);
  if (rec->dim == 0) return Scalar(1);
  const auto k = static_cast<std::size_t>(rec->dim);
  const auto m = static_cast<std::size_t>(spec.dim());

  // Columns of `basis` span the integer points of the face's direction space.
  const IntMatrix basis = integer_kernel_basis(spec.normal_matrix(face));
  const RatMatrix b = to_rational(basis);
  RatMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < m; ++r) gram(i, j) += b(r, i) * b(r, j);
  const RatMatrix gram_inv = *rational_inverse(gram);

  const auto anchor = spec.anchor();
  std::vector<std::vector<Scalar>> ambient(lattice.vertices().size());
  for (auto v : rec->vertices) ambient[v] = lattice.vertices()[v].at(anchor);
  const auto& origin = ambient[rec->vertices.front()];

  // Face-lattice coordinates y with basis * y = x - origin.
  std::vector<std::vector<Scalar>> local(ambient.size());
  for (auto v : rec->vertices) {
    std::vector<Scalar> bt(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < m; ++r)
        bt[i] += b(r, i) * (ambient[v][r] - origin[r]);
    local[v] = multiply(gram_inv, bt);
  }

  Scalar total(0);
  for (const auto& simplex : triangulate(lattice, face, ambient, ApexRule::least))
    total += simplex_volume_times_factorial(simplex, local);
  return total / Scalar(factorial(static_cast<unsigned>(k)));
}

std::vector<std::vector<Scalar>> chamber_samples(const HalfSpaceSpec& spec,
                                                 const FaceLattice& lattice,
                                                 std::size_t count,
                                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> numerator(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> scale(1, 3);
  const auto anchor = spec.anchor();

  std::set<std::vector<Scalar>> seen;
  std::vector<std::vector<Scalar>> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 50 * count + 100)
      throw ChamberCrossedError("could not find enough samples in the chamber");
    const Scalar t(scale(rng));
    // Shrink the perturbation on repeated failures.
    Integer den(8000);
    den <<= static_cast<unsigned>(std::min<std::size_t>(attempts / (count + 1), 40));
    std::vector<Scalar> sample;
    for (const auto& a : anchor)
      sample.push_back(t * a + Scalar(Integer(static_cast<long>(numerator(rng))), den));
    if (seen.contains(sample)) continue;
    try {
      numeric_volume_at(spec, lattice, sample);
    } catch (const ChamberCrossedError&) {
      continue;
    }
    seen.insert(sample);
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace cyh
