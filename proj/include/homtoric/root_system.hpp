// Root systems of compact semisimple Lie algebras over exact rationals.
//
// Roots are stored in simple-root coordinates (integer vectors); elements
// of the Cartan subalgebra live in fundamental-coweight coordinates, so a
// root evaluates on an element as a plain dot product. The Killing form in
// these coordinates has Gram matrix G_ij = sum over all roots of g_i g_j.

#pragma once

#include <string>
#include <vector>

#include "homtoric/rational.hpp"

namespace homtoric {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

Family family_from_char(char c);
char family_to_char(Family f);

struct SimpleFactor {
  Family family;
  int rank = 0;

  bool operator==(const SimpleFactor&) const = default;
};

/// Cartan matrix with entries c(i,j) = 2 (a_i, a_j) / (a_i, a_i); valid
/// finite type is guaranteed for the supported families and ranks.
/// Throws InvalidRank when the family-rank constraint is violated
/// (A: r>=1, B: r>=2, C: r>=2, D: r>=3, E: r in {6,7,8}, F: r=4, G: r=2).
IntMat cartan_matrix(const SimpleFactor& factor);

struct Root {
  IntVec coords;    // simple-root coordinates, full length
  int factor = 0;   // index of the owning simple factor
  bool positive = false;
};

class RootSystem {
 public:
  /// Generate all roots by reflection closure from the simple roots and
  /// compute the Killing Gram matrix. Throws InvalidRank.
  static RootSystem build(std::vector<SimpleFactor> factors);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int total_rank() const { return total_rank_; }
  const std::vector<Root>& roots() const { return roots_; }

  /// Killing Gram matrix on the coweight basis, G_ij = sum_g g_i g_j.
  const RatMat& gram() const { return gram_; }

  /// Column offset and rank of a factor's block of coordinates.
  std::pair<int, int> factor_span(int factor) const;

  /// Gram matrix of the simple roots under the Weyl-invariant form
  /// normalized so long roots have squared length 2 (block for one factor).
  RatMat normalized_form(int factor) const;

  /// Ratio (a,a)_0 / sum_g (g,a)_0^2 for a root a of the factor, computed
  /// with the normalized form; independent of the choice of root. Used as
  /// a self-consistency cross-check of the Gram machinery.
  Rational killing_scale(int factor, int root_index) const;
  Rational killing_scale(int factor) const;

  /// Evaluate a root (by index) on a Cartan element in coweight coordinates.
  Rational evaluate(int root_index, const RatVec& element) const;

 private:
  RootSystem() = default;

  std::vector<SimpleFactor> factors_;
  int total_rank_ = 0;
  std::vector<Root> roots_;
  RatMat gram_;
};

inline RootSystem build_root_system(std::vector<SimpleFactor> factors) {
  return RootSystem::build(std::move(factors));
}

inline const RatMat& killing_gram(const RootSystem& rs) { return rs.gram(); }

std::string factor_name(const SimpleFactor& factor);

}  // namespace homtoric
