#include "homtoric/linalg.hpp"

#include "homtoric/errors.hpp"

namespace homtoric {
namespace linalg {

std::vector<int> rref_in_place(RatMat& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<int> pivot_cols;
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    // first nonzero entry at or below pivot_row
    Eigen::Index sel = -1;
    for (Eigen::Index r = pivot_row; r < rows; ++r) {
      if (a(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) a.row(sel).swap(a.row(pivot_row));
    const Rational inv = Rational(1) / a(pivot_row, col);
    for (Eigen::Index c = col; c < cols; ++c) a(pivot_row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pivot_row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (Eigen::Index c = col; c < cols; ++c) {
        a(r, c) -= factor * a(pivot_row, c);
      }
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  return pivot_cols;
}

int rank(RatMat a) { return static_cast<int>(rref_in_place(a).size()); }

Rational determinant(RatMat a) {
  if (a.rows() != a.cols()) {
    throw SingularMatrix("determinant of a non-square matrix");
  }
  const Eigen::Index n = a.rows();
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) return Rational(0);
    if (sel != col) {
      a.row(sel).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = Rational(1) / a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
      }
    }
  }
  return det;
}

RatVec solve(const RatMat& a, const RatVec& b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw SingularMatrix("solve expects a square system");
  }
  const Eigen::Index n = a.rows();
  RatMat aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const std::vector<int> pivots = rref_in_place(aug);
  // A pivot landing in the augmented column means the coefficient matrix
  // is rank deficient (the system is then inconsistent).
  if (static_cast<Eigen::Index>(pivots.size()) != n ||
      (!pivots.empty() && pivots.back() == static_cast<int>(n))) {
    throw SingularMatrix("singular linear system");
  }
  return aug.col(n);
}

RatMat nullspace(const RatMat& a) {
  const Eigen::Index cols = a.cols();
  RatMat reduced = a;
  const std::vector<int> pivots = rref_in_place(reduced);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  const Eigen::Index nullity = cols - static_cast<Eigen::Index>(pivots.size());
  RatMat basis = RatMat::Zero(cols, nullity);
  Eigen::Index out = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    basis(free_col, out) = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      basis(pivots[row], out) = -reduced(static_cast<Eigen::Index>(row), free_col);
    }
    ++out;
  }
  return basis;
}

bool is_positive_definite(const RatMat& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index k = 1; k <= a.rows(); ++k) {
    if (determinant(a.topLeftCorner(k, k)) <= 0) return false;
  }
  return true;
}

}  // namespace linalg
}  // namespace homtoric
