// The Fano decision for a twisted toric fiber bundle over a flag manifold.
//
// The total space is Fano exactly when the fiber itself is Fano and, for
// every vertex q of the fiber's anticanonical polytope, the shifted point
// p_q = z_V + (twist pullback of q, dualized into z(k)) lies strictly
// inside the chamber cut out by the moved positive roots. The margins
// (values of the chamber functionals at the p_q) are reported exactly.

#pragma once

#include <optional>
#include <vector>

#include "homtoric/flag.hpp"
#include "homtoric/rational.hpp"
#include "homtoric/toric_fiber.hpp"
#include "homtoric/twist.hpp"

namespace homtoric {

struct FunctionalInfo {
  RatVec on_basis;          // coordinates on the flag's z(k) basis
  IntVec representative;    // simple-root coordinates of the first root in the class
  int num_roots = 0;
};

struct MarginFailure {
  int vertex = 0;      // polytope vertex index
  int functional = 0;  // chamber functional index
  Rational margin;
};

struct FanoReport {
  bool fiber_fano = false;
  bool verdict = false;
  bool boundary = false;  // some margin is exactly zero (and none negative)
  std::optional<Rational> min_margin;

  std::vector<RatVec> polytope_vertices;
  std::vector<RatVec> criterion_points;    // p_q, coweight coordinates
  std::vector<FunctionalInfo> functionals;
  RatMat margins;  // rows: vertices, columns: functionals
  std::vector<MarginFailure> failures;
  std::optional<RatVec> fiber_barycenter;
  bool integral_twist = true;
};

/// The point p_q for one vertex q of the fiber polytope: solve the twist
/// Gram system for the pullback of q and shift z_V by the result.
RatVec criterion_point(const FlagManifold& fm, const Twist& twist, const RatVec& vertex);

/// Full decision. The fan is validated here; if the fiber is not Fano the
/// verdict is negative and no margins are produced.
FanoReport evaluate_criterion(const FlagManifold& fm, const Fan& fiber, const Twist& twist);

}  // namespace homtoric
