// Smooth complete toric fibers described by their fans, with exact
// anticanonical polytope, barycenter and volume computations.
//
// A fan is given by primitive ray generators and maximal cones (index
// lists). Validation enforces smoothness (unimodular cones) and
// completeness (every facet shared by exactly two cones, connected
// adjacency, no unused rays). The fiber is Fano exactly when the support
// function of the anticanonical divisor is strictly convex, in which case
// the polytope { u : <u, ray> >= -1 } has one vertex per maximal cone.

#pragma once

#include <vector>

#include "homtoric/rational.hpp"

namespace homtoric {

struct Fan {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> cones;  // maximal cones as ray index lists

  bool operator==(const Fan&) const;
};

/// The fan of projective space of dimension m: unit rays e_1..e_m plus
/// the antidiagonal, maximal cones all m-subsets.
Fan make_cpm_fan(int m);

class ValidatedFan {
 public:
  int dim() const { return dim_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  /// Maximal cones, each sorted ascending; original order preserved.
  const std::vector<std::vector<int>>& cones() const { return cones_; }

  /// Index of the first maximal cone containing the given ray set.
  int cone_containing(const std::vector<int>& face) const;
  /// Whether the given ray set spans a face of some maximal cone.
  bool is_face(const std::vector<int>& face) const;

 private:
  friend ValidatedFan validate_fan(const Fan& fan);
  int dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<std::vector<int>> cones_;
};

/// Check the fan describes a smooth complete toric variety.
/// Throws DimensionMismatch (shape problems), NonPrimitiveRay,
/// NonUnimodularCone, IncompleteFan.
ValidatedFan validate_fan(const Fan& fan);

/// Strict convexity of the anticanonical support function: for every
/// maximal cone, the linear form taking -1 on its generators must be
/// > -1 on every other ray.
bool is_fano(const ValidatedFan& fan);

struct CanonicalPolytope {
  ValidatedFan fan;
  std::vector<RatVec> vertices;  // one per maximal cone, same order
};

/// Anticanonical polytope of a Fano fan, with full cross-validation
/// (vertices pairwise distinct, vertex enumeration from the half-space
/// description agrees, each vertex is tight on exactly dim rays).
/// Throws NotFano when the fiber is not Fano or a cross-check fails.
CanonicalPolytope canonical_polytope(const ValidatedFan& fan);

/// Exact barycenter, via the star triangulation from the origin refined
/// by pulling triangulations of the faces.
RatVec barycenter(const CanonicalPolytope& poly);

/// Exact Euclidean volume of the polytope.
Rational volume(const CanonicalPolytope& poly);

/// Brute-force vertex enumeration of { u : <u, ray> >= -1 } over all
/// dim-subsets of the rays; result sorted lexicographically. Independent
/// of the fan structure, used for cross-checks.
std::vector<RatVec> enumerate_halfspace_vertices(const std::vector<IntVec>& rays, int dim);

}  // namespace homtoric
