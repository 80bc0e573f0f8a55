#include "homtoric/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "homtoric/errors.hpp"

namespace homtoric {

namespace {

// Lexicographic order on integer coordinate vectors.
struct IntVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

bool is_positive_root(const IntVec& coords) {
  // Every nonzero root has all coordinates of one sign.
  for (int i = 0; i < coords.size(); ++i) {
    if (coords[i] > 0) return true;
    if (coords[i] < 0) return false;
  }
  return false;
}

void check_rank(const SimpleFactor& f) {
  const int r = f.rank;
  bool ok = false;
  switch (f.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r == 6 || r == 7 || r == 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) {
    throw InvalidRank("rank " + std::to_string(r) + " is not valid for family " +
                      std::string(1, family_to_char(f.family)));
  }
}

}  // namespace

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default:
      throw InvalidRank("unknown family letter '" + std::string(1, c) + "'");
  }
}

char family_to_char(Family f) { return static_cast<char>(f); }

std::string factor_name(const SimpleFactor& factor) {
  return std::string(1, family_to_char(factor.family)) + std::to_string(factor.rank);
}

IntMat cartan_matrix(const SimpleFactor& factor) {
  check_rank(factor);
  const int r = factor.rank;
  IntMat c = IntMat::Zero(r, r);
  for (int i = 0; i < r; ++i) c(i, i) = 2;

  auto chain = [&](int i, int j) {  // single bond between nodes i, j
    c(i, j) = -1;
    c(j, i) = -1;
  };

  switch (factor.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
      break;
    case Family::B:
      // Last simple root short: c(r-2, r-1) = -1, c(r-1, r-2) = -2.
      for (int i = 0; i + 2 < r; ++i) chain(i, i + 1);
      c(r - 2, r - 1) = -1;
      c(r - 1, r - 2) = -2;
      break;
    case Family::C:
      // Last simple root long: transpose of the B matrix.
      for (int i = 0; i + 2 < r; ++i) chain(i, i + 1);
      c(r - 2, r - 1) = -2;
      c(r - 1, r - 2) = -1;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) chain(i, i + 1);
      chain(r - 3, r - 1);
      break;
    case Family::E:
      // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      chain(0, 2);
      for (int i = 2; i + 1 < r; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case Family::F:
      chain(0, 1);
      c(1, 2) = -1;
      c(2, 1) = -2;
      chain(2, 3);
      break;
    case Family::G:
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
  }
  return c;
}

RootSystem RootSystem::build(std::vector<SimpleFactor> factors) {
  if (factors.empty()) throw InvalidRank("a root system needs at least one simple factor");

  RootSystem rs;
  rs.factors_ = std::move(factors);
  rs.total_rank_ = 0;
  for (const auto& f : rs.factors_) {
    check_rank(f);
    rs.total_rank_ += f.rank;
  }

  int offset = 0;
  for (int fi = 0; fi < static_cast<int>(rs.factors_.size()); ++fi) {
    const SimpleFactor& f = rs.factors_[fi];
    const IntMat cartan = cartan_matrix(f);
    const int r = f.rank;

    // Reflection closure from the simple roots within this factor's block.
    // s_i(g) = g - g(h_i) a_i, and g(h_i) = sum_k c(i,k) g_k in simple-root
    // coordinates, so only coordinate i changes.
    std::set<IntVec, IntVecLess> seen;
    std::vector<IntVec> queue;
    for (int i = 0; i < r; ++i) {
      IntVec simple = IntVec::Zero(r);
      simple[i] = 1;
      seen.insert(simple);
      queue.push_back(simple);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const IntVec g = queue[head];
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int k = 0; k < r; ++k) pairing += cartan(i, k) * g[k];
        IntVec image = g;
        image[i] -= pairing;
        if (seen.insert(image).second) queue.push_back(image);
      }
    }

    for (const IntVec& g : seen) {
      Root root;
      root.coords = IntVec::Zero(rs.total_rank_);
      root.coords.segment(offset, r) = g;
      root.factor = fi;
      root.positive = is_positive_root(g);
      rs.roots_.push_back(std::move(root));
    }
    offset += r;
  }

  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    if (a.positive != b.positive) return a.positive;  // positives first
    for (int i = 0; i < a.coords.size(); ++i) {
      if (a.coords[i] != b.coords[i]) return a.coords[i] < b.coords[i];
    }
    return false;
  });

  rs.gram_ = RatMat::Zero(rs.total_rank_, rs.total_rank_);
  for (const Root& root : rs.roots_) {
    for (int i = 0; i < rs.total_rank_; ++i) {
      if (root.coords[i] == 0) continue;
      for (int j = 0; j < rs.total_rank_; ++j) {
        rs.gram_(i, j) += Rational(root.coords[i]) * root.coords[j];
      }
    }
  }
  return rs;
}

std::pair<int, int> RootSystem::factor_span(int factor) const {
  int offset = 0;
  for (int fi = 0; fi < factor; ++fi) offset += factors_[fi].rank;
  return {offset, factors_[factor].rank};
}

RatMat RootSystem::normalized_form(int factor) const {
  const SimpleFactor& f = factors_[factor];
  const IntMat cartan = cartan_matrix(f);
  const int r = f.rank;

  // Symmetrizing weights d_i with d_j = d_i c(i,j) / c(j,i) along graph
  // edges, scaled so max d_i = 1; then N(i,j) = d_i c(i,j) is symmetric
  // and long roots have N-squared-length 2.
  std::vector<Rational> d(r, Rational(0));
  d[0] = 1;
  std::vector<int> queue = {0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int i = queue[head];
    for (int j = 0; j < r; ++j) {
      if (cartan(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * cartan(i, j) / cartan(j, i);
      queue.push_back(j);
    }
  }
  Rational dmax = d[0];
  for (const Rational& v : d) dmax = std::max(dmax, v);
  RatMat form(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) form(i, j) = d[i] / dmax * cartan(i, j);
  }
  return form;
}

Rational RootSystem::killing_scale(int factor, int root_index) const {
  const RatMat form = normalized_form(factor);
  const auto [offset, r] = factor_span(factor);
  const Root& a = roots_[root_index];
  if (a.factor != factor) throw DimensionMismatch("root does not belong to the requested factor");

  RatVec av(r);
  for (int i = 0; i < r; ++i) av[i] = a.coords[offset + i];
  const RatVec form_a = form * av;
  const Rational aa = av.dot(form_a);

  Rational denom = 0;
  for (const Root& g : roots_) {
    if (g.factor != factor) continue;
    Rational ga = 0;
    for (int i = 0; i < r; ++i) ga += Rational(g.coords[offset + i]) * form_a[i];
    denom += ga * ga;
  }
  if (denom == 0) throw DegenerateFunctional("zero Killing norm");
  return aa / denom;
}

Rational RootSystem::killing_scale(int factor) const {
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i) {
    if (roots_[i].factor == factor) return killing_scale(factor, i);
  }
  throw DimensionMismatch("factor index out of range");
}

Rational RootSystem::evaluate(int root_index, const RatVec& element) const {
  const Root& root = roots_[root_index];
  if (element.size() != total_rank_) {
    throw DimensionMismatch("Cartan element has wrong dimension");
  }
  Rational value = 0;
  for (int i = 0; i < total_rank_; ++i) {
    if (root.coords[i] != 0) value += Rational(root.coords[i]) * element[i];
  }
  return value;
}

}  // namespace homtoric
