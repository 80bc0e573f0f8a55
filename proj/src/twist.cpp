#include "homtoric/twist.hpp"

#include <string>

#include "homtoric/errors.hpp"
#include "homtoric/linalg.hpp"

namespace homtoric {

Twist validate_twist(const FlagManifold& fm, RatMat basis, RatMat images) {
  const int n = fm.root_system().total_rank();
  const int s = fm.z_dim();

  if (basis.cols() != s) {
    throw NotABasis("twist basis has " + std::to_string(basis.cols()) +
                    " vectors, but z(k) has dimension " + std::to_string(s));
  }
  if (basis.rows() != n) {
    throw DimensionMismatch("twist basis vectors have length " + std::to_string(basis.rows()) +
                            ", expected " + std::to_string(n));
  }
  for (int c = 0; c < s; ++c) {
    for (int idx : fm.isotropy_roots()) {
      const auto& coords = fm.root_system().roots()[idx].coords;
      Rational v = 0;
      for (int k = 0; k < n; ++k) {
        if (coords[k] != 0) v += Rational(coords[k]) * basis(k, c);
      }
      if (v != 0) {
        throw NotInCenter("twist basis vector " + std::to_string(c) +
                          " does not annihilate an isotropy root");
      }
    }
  }
  if (linalg::rank(basis) != s) {
    throw NotABasis("twist basis vectors are linearly dependent");
  }

  if (images.rows() != s) {
    throw DimensionMismatch("twist has " + std::to_string(images.rows()) +
                            " image vectors, expected one per basis vector (" +
                            std::to_string(s) + ")");
  }
  const int m = static_cast<int>(images.cols());
  if (m < 1) throw DimensionMismatch("twist images must have positive dimension");
  // The zero twist (an untwisted product bundle) is accepted; a nonzero
  // map that misses part of the fiber torus algebra is rejected.
  bool any_nonzero = false;
  for (int i = 0; i < images.rows(); ++i) {
    for (int j = 0; j < m; ++j) {
      if (images(i, j) != 0) any_nonzero = true;
    }
  }
  if (any_nonzero && linalg::rank(images) != m) {
    throw RankDeficient("twist images do not span the fiber torus algebra");
  }

  Twist t;
  t.z_gram_ = basis.transpose() * fm.root_system().gram() * basis;
  t.basis_ = std::move(basis);
  t.images_ = std::move(images);
  t.integral_images_ = true;
  for (int i = 0; i < t.images_.rows(); ++i) {
    for (int j = 0; j < t.images_.cols(); ++j) {
      if (!is_integer(t.images_(i, j))) t.integral_images_ = false;
    }
  }
  return t;
}

RatVec pullback_vertex(const Twist& twist, const RatVec& vertex) {
  if (vertex.size() != twist.fiber_dim()) {
    throw DimensionMismatch("vertex dimension does not match the twist images");
  }
  return twist.images() * vertex;
}

}  // namespace homtoric
