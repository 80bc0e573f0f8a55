// Twisting homomorphisms from the center z(k) of the isotropy algebra to
// the torus algebra of the fiber, given by a basis of z(k) and the image
// of each basis vector.

#pragma once

#include "homtoric/flag.hpp"
#include "homtoric/rational.hpp"

namespace homtoric {

class Twist {
 public:
  /// Basis of z(k), coweight coordinates, one column per vector.
  const RatMat& basis() const { return basis_; }
  /// Row i is the image of basis vector i in the fiber torus algebra.
  const RatMat& images() const { return images_; }
  /// Killing Gram matrix of the twist basis.
  const RatMat& z_gram() const { return z_gram_; }
  /// Fiber torus dimension.
  int fiber_dim() const { return static_cast<int>(images_.cols()); }
  /// Whether every image coordinate is an integer on the supplied basis.
  /// Non-integral images only trigger a warning: the supplied basis need
  /// not generate the coweight lattice, so this check is heuristic.
  bool integral_images() const { return integral_images_; }

 private:
  friend Twist validate_twist(const FlagManifold& fm, RatMat basis, RatMat images);
  RatMat basis_;
  RatMat images_;
  RatMat z_gram_;
  bool integral_images_ = true;
};

/// Check that the columns of `basis` form a basis of z(k) (they must
/// annihilate every isotropy root and be independent, with exactly
/// z_dim() of them) and that the images span the fiber torus algebra.
/// Throws DimensionMismatch, NotInCenter, NotABasis, RankDeficient.
Twist validate_twist(const FlagManifold& fm, RatMat basis, RatMat images);

/// Pullback of a point of the fiber torus character space along the
/// twist: component i is the pairing of `vertex` with image i.
RatVec pullback_vertex(const Twist& twist, const RatVec& vertex);

}  // namespace homtoric
