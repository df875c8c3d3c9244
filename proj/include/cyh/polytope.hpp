#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cyh/int_matrix.hpp"
#include "cyh/multipoly.hpp"
#include "cyh/scalar.hpp"

namespace cyh {

/// Set of facet indices (0-based) packed into a bitmask; at most 64 facets.
using FacetSet = std::uint64_t;

inline constexpr std::size_t kMaxFacets = 64;

std::vector<std::size_t> facet_indices(FacetSet set);
FacetSet make_facet_set(std::span<const std::size_t> indices);
/// 1-based rendering, e.g. "{1,3}".
std::string facet_set_string(FacetSet set);

struct Facet {
  std::vector<std::int64_t> normal;
  std::int64_t offset = 0;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// The polytope family { x : x . n_i <= lambda_i } with a distinguished
/// integer offset vector lambda^0. Construction checks the per-facet
/// invariants (nonzero primitive normals of the right length, at least
/// dim + 1 facets); geometric ones (bounded, simple, irredundant) are checked
/// by enumerate_vertices.
class HalfSpaceSpec {
 public:
  HalfSpaceSpec(int dim, std::vector<Facet> facets, std::string name = {});

  int dim() const { return dim_; }
  std::size_t num_facets() const { return facets_.size(); }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(std::size_t i) const { return facets_.at(i); }
  const std::string& name() const { return name_; }

  /// lambda^0 as exact scalars.
  std::vector<Scalar> anchor() const;
  /// Rows n_i for i in `set`, in increasing index order.
  IntMatrix normal_matrix(FacetSet set) const;

  friend bool operator==(const HalfSpaceSpec&, const HalfSpaceSpec&) = default;

 private:
  int dim_;
  std::vector<Facet> facets_;
  std::string name_;
};

/// A vertex of the family as the solution of its m active facet equations.
/// The coordinates are linear in lambda: v(lambda) = inverse * lambda_S.
struct VertexChart {
  FacetSet active = 0;
  std::vector<std::size_t> facets;  // active set, ascending
  IntMatrix normals;                // rows n_i, i in facets
  Integer det;
  RatMatrix inverse;
  std::vector<Scalar> point;  // vertex at the offsets it was enumerated at

  /// Coordinates at an arbitrary offset vector (length d).
  std::vector<Scalar> at(std::span<const Scalar> offsets) const;
  /// Coordinates as linear forms in lambda_1..lambda_d.
  std::vector<MultiPoly> symbolic(std::size_t num_facets) const;
  /// Edge directions leaving the vertex, scaled to primitive integer vectors
  /// (one per active facet dropped). Rows of the result.
  IntMatrix primitive_edges() const;
};

/// Finds every vertex of { x : x . n_i <= offsets_i } by trying all m-subsets
/// of facets. Throws NonSimpleError, UnboundedError, EmptyError or
/// RedundantFacetError. Vertices come back sorted lexicographically by
/// coordinates.
std::vector<VertexChart> enumerate_vertices(const HalfSpaceSpec& spec,
                                            std::span<const Scalar> offsets);
std::vector<VertexChart> enumerate_vertices(const HalfSpaceSpec& spec);

struct DelzantFailure {
  std::vector<Scalar> vertex;
  FacetSet active = 0;
  Integer det;
};

struct DelzantReport {
  bool passed = true;
  std::vector<DelzantFailure> failures;
};

/// Unimodularity of the facet normals at every vertex. Failures are report
/// entries; only the vertex enumeration itself can throw.
DelzantReport validate_delzant(const HalfSpaceSpec& spec);
DelzantReport validate_delzant(const std::vector<VertexChart>& vertices);

struct FaceRecord {
  FacetSet active = 0;
  int dim = 0;
  std::vector<std::size_t> vertices;  // indices into FaceLattice::vertices()
};

/// All nonempty faces of a simple polytope keyed by their active facet set.
/// Any facet set that is not a key names the empty face.
class FaceLattice {
 public:
  FaceLattice(int dim, std::size_t num_facets, std::vector<VertexChart> vertices);

  int dim() const { return dim_; }
  std::size_t num_facets() const { return num_facets_; }
  const std::vector<VertexChart>& vertices() const { return vertices_; }
  const std::map<FacetSet, FaceRecord>& faces() const { return faces_; }

  /// nullptr when the intersection of the facets in `set` is empty.
  const FaceRecord* resolve(FacetSet set) const;

  /// Number of faces of each dimension 0..dim (index = dimension).
  std::vector<std::size_t> f_vector() const;
  /// Sum over all faces, the polytope included, of (-1)^dim.
  std::int64_t euler_sum() const;

 private:
  int dim_;
  std::size_t num_facets_;
  std::vector<VertexChart> vertices_;
  std::map<FacetSet, FaceRecord> faces_;
};

/// Vertex enumeration plus Delzant check; throws NotDelzantError listing the
/// offending vertices.
FaceLattice build_face_lattice(const HalfSpaceSpec& spec);

enum class Region { interior, boundary, outside };

std::string to_string(Region r);

/// Classifies x against k * Delta. Throws DimensionError on length mismatch.
Region contains_lattice_point(const HalfSpaceSpec& spec,
                              std::span<const std::int64_t> x, std::int64_t k);

}  // namespace cyh
