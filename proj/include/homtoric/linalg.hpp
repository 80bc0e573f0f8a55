// Exact dense linear algebra over rationals: reduced row echelon form,
// linear solves, nullspaces, determinants. Pivoting is first-available in
// fixed column order so every result is reproducible bit for bit.

#pragma once

#include <vector>

#include "homtoric/rational.hpp"

namespace homtoric {
namespace linalg {

/// In-place reduced row echelon form. Returns the pivot column of each
/// pivot row, in row order.
std::vector<int> rref_in_place(RatMat& a);

int rank(RatMat a);

Rational determinant(RatMat a);

/// Solve A x = b for square invertible A. Throws SingularMatrix otherwise.
RatVec solve(const RatMat& a, const RatVec& b);

/// Basis of {x : A x = 0}, one column per free variable. Free variables are
/// assigned in ascending column order, each set to 1 in its own basis
/// vector, which makes the basis deterministic.
RatMat nullspace(const RatMat& a);

/// Exact Sylvester test: all leading principal minors positive.
bool is_positive_definite(const RatMat& a);

}  // namespace linalg
}  // namespace homtoric
