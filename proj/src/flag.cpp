#include "homtoric/flag.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "homtoric/errors.hpp"
#include "homtoric/linalg.hpp"

namespace homtoric {

FlagManifold FlagManifold::build(FlagSpec spec) {
  FlagManifold fm(std::move(spec.rs));
  fm.marks_ = std::move(spec.marks);

  const int n = fm.rs_.total_rank();
  if (fm.marks_.size() != n) {
    throw DimensionMismatch("marks vector has length " + std::to_string(fm.marks_.size()) +
                            ", expected " + std::to_string(n));
  }

  const auto& roots = fm.rs_.roots();
  for (int i = 0; i < static_cast<int>(roots.size()); ++i) {
    Rational value = 0;
    for (int k = 0; k < n; ++k) {
      if (roots[i].coords[k] != 0) value += Rational(roots[i].coords[k]) * fm.marks_[k];
    }
    if (value == 0) {
      fm.isotropy_.push_back(i);
    } else if (value > 0) {
      fm.moved_positive_.push_back(i);
    }
  }
  if (fm.moved_positive_.empty()) {
    throw TrivialFlag("the marking element is central; no roots are moved");
  }

  // z(k) = joint kernel of the isotropy roots acting on the Cartan algebra.
  if (fm.isotropy_.empty()) {
    fm.z_basis_ = RatMat::Identity(n, n);
  } else {
    RatMat rows(static_cast<int>(fm.isotropy_.size()), n);
    for (int r = 0; r < rows.rows(); ++r) {
      for (int k = 0; k < n; ++k) rows(r, k) = roots[fm.isotropy_[r]].coords[k];
    }
    fm.z_basis_ = linalg::nullspace(rows);
  }

  const RatMat& gram = fm.rs_.gram();
  fm.z_gram_ = fm.z_basis_.transpose() * gram * fm.z_basis_;

  // z_V solves G z = f where f is the sum of the positive moved roots
  // (a functional in simple-root coordinates).
  RatVec moved_sum = RatVec::Zero(n);
  for (int idx : fm.moved_positive_) {
    for (int k = 0; k < n; ++k) moved_sum[k] += roots[idx].coords[k];
  }
  fm.z_v_ = linalg::solve(gram, moved_sum);

  // Consistency of the construction: z_V must vanish on every isotropy
  // root and be strictly positive on every positive moved root.
  for (int idx : fm.isotropy_) {
    if (fm.rs_.evaluate(idx, fm.z_v_) != 0) {
      throw std::logic_error("anticanonical element does not vanish on an isotropy root");
    }
  }
  for (int idx : fm.moved_positive_) {
    if (fm.rs_.evaluate(idx, fm.z_v_) <= 0) {
      throw std::logic_error("anticanonical element is not positive on a moved root");
    }
  }

  // Chamber: restrictions of the positive moved roots to z(k), first
  // occurrence order, duplicates merged.
  std::map<std::vector<Rational>, int> seen;
  for (int idx : fm.moved_positive_) {
    RatVec restricted(fm.z_basis_.cols());
    for (int c = 0; c < fm.z_basis_.cols(); ++c) {
      Rational v = 0;
      for (int k = 0; k < n; ++k) {
        if (roots[idx].coords[k] != 0) v += Rational(roots[idx].coords[k]) * fm.z_basis_(k, c);
      }
      restricted[c] = v;
    }
    auto key = to_std(restricted);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), static_cast<int>(fm.chamber_.size()));
      fm.chamber_.push_back(ChamberFunctional{std::move(restricted), {idx}});
    } else {
      fm.chamber_[it->second].roots.push_back(idx);
    }
  }
  return fm;
}

}  // namespace homtoric
