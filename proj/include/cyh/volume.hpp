#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyh/multipoly.hpp"
#include "cyh/polytope.hpp"

namespace cyh {

/// vol(Delta(lambda)) as a polynomial in lambda_1..lambda_d, valid in the
/// chamber of `chamber_anchor`.
struct VolumePolynomial {
  MultiPoly poly{1};
  int degree = 0;
  std::vector<Scalar> chamber_anchor;
};

/// Sum over facets of d vol / d lambda_i, with the summands kept.
struct BoundaryVolumePolynomial {
  MultiPoly poly{1};
  std::vector<MultiPoly> per_facet;
};

/// Which vertex a pulling triangulation cones from at each level.
enum class ApexRule { least, greatest };

/// Pulling triangulation of the face `face` (FacetSet 0 = the polytope).
/// `coords` gives the vertex positions used to rank apex candidates in
/// graded-lex order. Each simplex is a list of dim+1 vertex indices, apex
/// first.
std::vector<std::vector<std::size_t>> triangulate(
    const FaceLattice& lattice, FacetSet face,
    std::span<const std::vector<Scalar>> coords, ApexRule rule);

/// Symbolic volume from a triangulation fixed at lambda^0: each simplex
/// contributes |det(v_i(lambda) - v_0(lambda))| / m! with the sign frozen by
/// its value at lambda^0.
VolumePolynomial volume_polynomial(const HalfSpaceSpec& spec,
                                   const FaceLattice& lattice,
                                   ApexRule rule = ApexRule::least);

BoundaryVolumePolynomial boundary_volume_polynomial(const VolumePolynomial& v);

/// Independent exact volume at an offset vector in the chamber of lambda^0:
/// fresh vertex enumeration and triangulation at `sample`. Throws
/// ChamberCrossedError if the vertex/facet incidences differ from lattice's.
Scalar numeric_volume_at(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                         std::span<const Scalar> sample);

/// Volume of the face F_I measured in its own affine lattice (a lattice
/// basis of the face's direction space has covolume 1). For a facet this is
/// the Euclidean volume divided by the length of its primitive normal.
Scalar lattice_face_volume(const HalfSpaceSpec& spec, const FaceLattice& lattice,
                           FacetSet face);

/// `count` distinct offset vectors in the chamber of lambda^0, of the form
/// t * lambda^0 + delta with small random rational delta. Deterministic for a
/// given seed.
std::vector<std::vector<Scalar>> chamber_samples(const HalfSpaceSpec& spec,
                                                 const FaceLattice& lattice,
                                                 std::size_t count,
                                                 std::uint64_t seed = 1);

/// Determinant of a square matrix of polynomials by cofactor expansion.
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m);

}  // namespace cyh
