// Flag manifolds G/K attached to a root system and a marking element.
//
// The marking element xi (fundamental-coweight coordinates) splits the
// roots into the isotropy part R_o = { a : a(xi) = 0 } and the moved part
// R_m; the positive moved roots define a Kaehler cone on the center z(k)
// of the isotropy algebra. Everything is exact rational arithmetic.

#pragma once

#include <utility>
#include <vector>

#include "homtoric/rational.hpp"
#include "homtoric/root_system.hpp"

namespace homtoric {

struct FlagSpec {
  RootSystem rs;
  RatVec marks;  // coweight coordinates of the marking element xi
};

/// One wall functional of the chamber: the common restriction to z(k) of
/// a class of positive moved roots.
struct ChamberFunctional {
  RatVec on_basis;         // coordinates on the z(k) basis
  std::vector<int> roots;  // indices of the roots restricting to it
};

class FlagManifold {
 public:
  /// Classify roots against the marks, compute the center z(k), the
  /// anticanonical element z_V, and the deduplicated chamber functionals.
  /// Throws DimensionMismatch (marks length), TrivialFlag (no moved roots).
  static FlagManifold build(FlagSpec spec);

  const RootSystem& root_system() const { return rs_; }
  const RatVec& marks() const { return marks_; }

  /// Indices (into root_system().roots()) of the isotropy roots R_o.
  const std::vector<int>& isotropy_roots() const { return isotropy_; }
  /// Indices of the positive moved roots R_m^+.
  const std::vector<int>& moved_positive_roots() const { return moved_positive_; }

  /// Basis of z(k) as columns, coweight coordinates; s = z_dim() columns.
  const RatMat& z_basis() const { return z_basis_; }
  int z_dim() const { return static_cast<int>(z_basis_.cols()); }

  /// Killing Gram matrix restricted to the z(k) basis.
  const RatMat& z_gram() const { return z_gram_; }

  /// The element z_V with B(z_V, -) = sum of the positive moved roots;
  /// it lies in z(k), vanishes on R_o and is positive on R_m^+.
  const RatVec& kahler_einstein_element() const { return z_v_; }

  const std::vector<ChamberFunctional>& chamber() const { return chamber_; }

 private:
  explicit FlagManifold(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  RatVec marks_;
  std::vector<int> isotropy_;
  std::vector<int> moved_positive_;
  RatMat z_basis_;
  RatMat z_gram_;
  RatVec z_v_;
  std::vector<ChamberFunctional> chamber_;
};

inline FlagManifold build_flag_manifold(FlagSpec spec) {
  return FlagManifold::build(std::move(spec));
}

}  // namespace homtoric
