#include "homtoric/toric_fiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "homtoric/errors.hpp"
#include "homtoric/linalg.hpp"

namespace homtoric {

namespace {

bool same_vec(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

// Linear form taking -1 on every generator of the cone.
RatVec cone_form(const std::vector<IntVec>& rays, const std::vector<int>& cone, int dim) {
  RatMat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = rays[cone[r]][c];
  }
  RatVec rhs = RatVec::Constant(dim, Rational(-1));
  return linalg::solve(m, rhs);
}

Rational pair(const RatVec& u, const IntVec& ray) {
  Rational v = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (ray[i] != 0) v += u[i] * ray[i];
  }
  return v;
}

}  // namespace

bool Fan::operator==(const Fan& other) const {
  if (dim != other.dim || rays.size() != other.rays.size() || cones != other.cones) return false;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!same_vec(rays[i], other.rays[i])) return false;
  }
  return true;
}

Fan make_cpm_fan(int m) {
  if (m < 1) throw DimensionMismatch("projective fiber dimension must be at least 1");
  Fan fan;
  fan.dim = m;
  for (int i = 0; i < m; ++i) {
    IntVec e = IntVec::Zero(m);
    e[i] = 1;
    fan.rays.push_back(e);
  }
  fan.rays.push_back(IntVec::Constant(m, -1));

  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  fan.cones.push_back(all);
  for (int omit = 0; omit < m; ++omit) {
    std::vector<int> cone;
    for (int i = 0; i <= m; ++i) {
      if (i != omit) cone.push_back(i);
    }
    fan.cones.push_back(cone);
  }
  return fan;
}

int ValidatedFan::cone_containing(const std::vector<int>& face) const {
  for (int c = 0; c < static_cast<int>(cones_.size()); ++c) {
    if (std::includes(cones_[c].begin(), cones_[c].end(), face.begin(), face.end())) return c;
  }
  return -1;
}

bool ValidatedFan::is_face(const std::vector<int>& face) const {
  return cone_containing(face) >= 0;
}

ValidatedFan validate_fan(const Fan& fan) {
  if (fan.dim < 1) throw DimensionMismatch("fan dimension must be at least 1");
  if (fan.rays.empty()) throw IncompleteFan("fan has no rays");
  if (fan.cones.empty()) throw IncompleteFan("fan has no maximal cones");

  const int dim = fan.dim;
  const int nrays = static_cast<int>(fan.rays.size());

  for (int i = 0; i < nrays; ++i) {
    const IntVec& ray = fan.rays[i];
    if (ray.size() != dim) {
      throw DimensionMismatch("ray " + std::to_string(i) + " has wrong dimension");
    }
    int g = 0;
    for (int k = 0; k < dim; ++k) g = std::gcd(g, std::abs(ray[k]));
    if (g == 0) throw NonPrimitiveRay("ray " + std::to_string(i) + " is zero");
    if (g != 1) {
      throw NonPrimitiveRay("ray " + std::to_string(i) + " is divisible by " + std::to_string(g));
    }
    for (int j = 0; j < i; ++j) {
      if (same_vec(fan.rays[j], ray)) {
        throw IncompleteFan("rays " + std::to_string(j) + " and " + std::to_string(i) +
                            " coincide");
      }
    }
  }

  ValidatedFan out;
  out.dim_ = dim;
  out.rays_ = fan.rays;

  std::set<std::vector<int>> cone_sets;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    std::vector<int> cone = fan.cones[c];
    if (static_cast<int>(cone.size()) != dim) {
      throw DimensionMismatch("maximal cone " + std::to_string(c) + " must have " +
                              std::to_string(dim) + " generators");
    }
    std::sort(cone.begin(), cone.end());
    for (std::size_t k = 0; k < cone.size(); ++k) {
      if (cone[k] < 0 || cone[k] >= nrays) {
        throw DimensionMismatch("maximal cone " + std::to_string(c) + " uses ray index " +
                                std::to_string(cone[k]) + " out of range");
      }
      if (k > 0 && cone[k] == cone[k - 1]) {
        throw DimensionMismatch("maximal cone " + std::to_string(c) + " repeats ray " +
                                std::to_string(cone[k]));
      }
    }
    if (!cone_sets.insert(cone).second) {
      throw IncompleteFan("maximal cone " + std::to_string(c) + " occurs twice");
    }

    RatMat m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int k = 0; k < dim; ++k) m(r, k) = fan.rays[cone[r]][k];
    }
    const Rational det = linalg::determinant(m);
    if (det != 1 && det != -1) {
      throw NonUnimodularCone("maximal cone " + std::to_string(c) +
                              " has generator determinant " + format_rational(det));
    }
    out.cones_.push_back(std::move(cone));
  }

  // Completeness: every facet of a maximal cone is shared by exactly two
  // maximal cones, and the facet adjacency graph is connected.
  std::map<std::vector<int>, std::vector<int>> facets;
  for (int c = 0; c < static_cast<int>(out.cones_.size()); ++c) {
    for (int drop = 0; drop < dim; ++drop) {
      std::vector<int> facet;
      for (int k = 0; k < dim; ++k) {
        if (k != drop) facet.push_back(out.cones_[c][k]);
      }
      facets[facet].push_back(c);
    }
  }
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2) {
      throw IncompleteFan("a facet belongs to " + std::to_string(owners.size()) +
                          " maximal cones, expected 2");
    }
  }
  std::vector<char> reached(out.cones_.size(), 0);
  std::vector<int> queue = {0};
  reached[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int c = queue[head];
    for (int drop = 0; drop < dim; ++drop) {
      std::vector<int> facet;
      for (int k = 0; k < dim; ++k) {
        if (k != drop) facet.push_back(out.cones_[c][k]);
      }
      for (int other : facets[facet]) {
        if (!reached[other]) {
          reached[other] = 1;
          queue.push_back(other);
        }
      }
    }
  }
  if (queue.size() != out.cones_.size()) {
    throw IncompleteFan("the maximal cones do not form a connected fan");
  }

  std::vector<char> used(nrays, 0);
  for (const auto& cone : out.cones_) {
    for (int r : cone) used[r] = 1;
  }
  for (int r = 0; r < nrays; ++r) {
    if (!used[r]) throw IncompleteFan("ray " + std::to_string(r) + " is not used by any cone");
  }
  return out;
}

bool is_fano(const ValidatedFan& fan) {
  for (const auto& cone : fan.cones()) {
    const RatVec u = cone_form(fan.rays(), cone, fan.dim());
    for (int r = 0; r < static_cast<int>(fan.rays().size()); ++r) {
      if (std::binary_search(cone.begin(), cone.end(), r)) continue;
      if (pair(u, fan.rays()[r]) <= -1) return false;
    }
  }
  return true;
}

CanonicalPolytope canonical_polytope(const ValidatedFan& fan) {
  if (!is_fano(fan)) {
    throw NotFano("the anticanonical support function is not strictly convex");
  }
  CanonicalPolytope poly;
  poly.fan = fan;
  for (const auto& cone : fan.cones()) {
    poly.vertices.push_back(cone_form(fan.rays(), cone, fan.dim()));
  }

  std::vector<RatVec> sorted = poly.vertices;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (vec_eq(sorted[i - 1], sorted[i])) {
      throw NotFano("two maximal cones share the same polytope vertex");
    }
  }

  const std::vector<RatVec> enumerated = enumerate_halfspace_vertices(fan.rays(), fan.dim());
  bool agree = enumerated.size() == sorted.size();
  for (std::size_t i = 0; agree && i < sorted.size(); ++i) {
    agree = vec_eq(enumerated[i], sorted[i]);
  }
  if (!agree) {
    throw NotFano("half-space vertex enumeration disagrees with the fan vertices");
  }

  for (const RatVec& v : poly.vertices) {
    int tight = 0;
    for (const IntVec& ray : fan.rays()) {
      if (pair(v, ray) == -1) ++tight;
    }
    if (tight != fan.dim()) {
      throw NotFano("a polytope vertex is tight on " + std::to_string(tight) +
                    " rays, expected " + std::to_string(fan.dim()));
    }
  }
  return poly;
}

std::vector<RatVec> enumerate_halfspace_vertices(const std::vector<IntVec>& rays, int dim) {
  const int n = static_cast<int>(rays.size());
  std::vector<RatVec> found;
  if (n < dim) return found;

  std::vector<int> pick(dim);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    RatMat m(dim, dim);
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) m(r, c) = rays[pick[r]][c];
    }
    if (linalg::determinant(m) != 0) {
      const RatVec rhs = RatVec::Constant(dim, Rational(-1));
      const RatVec u = linalg::solve(m, rhs);
      bool feasible = true;
      for (const IntVec& ray : rays) {
        if (pair(u, ray) < -1) {
          feasible = false;
          break;
        }
      }
      if (feasible) found.push_back(u);
    }

    int i = dim - 1;
    while (i >= 0 && pick[i] == n - dim + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < dim; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end(), vec_eq), found.end());
  return found;
}

namespace {

// Pulling triangulation of the polytope face fixed by the fan face S:
// its vertices are the u_sigma over maximal cones sigma containing S.
// The apex is the vertex of the first such cone; the opposite facets are
// indexed by the fan faces S + {r} with r outside that cone.
void triangulate_face(const ValidatedFan& fan, const std::vector<int>& face,
                      std::vector<std::vector<int>>& out, std::vector<int>& prefix) {
  const int apex = fan.cone_containing(face);
  if (static_cast<int>(face.size()) == fan.dim()) {
    std::vector<int> simplex = prefix;
    simplex.push_back(apex);
    out.push_back(std::move(simplex));
    return;
  }
  const auto& apex_cone = fan.cones()[apex];
  prefix.push_back(apex);
  for (int r = 0; r < static_cast<int>(fan.rays().size()); ++r) {
    if (std::binary_search(apex_cone.begin(), apex_cone.end(), r)) continue;
    std::vector<int> extended = face;
    extended.insert(std::lower_bound(extended.begin(), extended.end(), r), r);
    if (fan.is_face(extended)) triangulate_face(fan, extended, out, prefix);
  }
  prefix.pop_back();
}

// Star triangulation from the origin: simplices conv(0, u_1..u_dim) with
// vertex indices into poly.vertices (one facet of the polytope per ray).
std::vector<std::vector<int>> star_triangulation(const CanonicalPolytope& poly) {
  std::vector<std::vector<int>> simplices;
  std::vector<int> prefix;
  for (int r = 0; r < static_cast<int>(poly.fan.rays().size()); ++r) {
    triangulate_face(poly.fan, {r}, simplices, prefix);
  }
  return simplices;
}

}  // namespace

RatVec barycenter(const CanonicalPolytope& poly) {
  const int dim = poly.fan.dim();
  Rational total = 0;
  RatVec weighted = RatVec::Zero(dim);
  for (const auto& simplex : star_triangulation(poly)) {
    RatMat m(dim, dim);
    for (int r = 0; r < dim; ++r) m.row(r) = poly.vertices[simplex[r]].transpose();
    Rational vol = linalg::determinant(m);
    if (vol < 0) vol = -vol;
    // The simplex includes the origin, so its centroid is the vertex sum
    // over dim + 1; the factorial in the volume cancels in the ratio.
    RatVec centroid = RatVec::Zero(dim);
    for (int r = 0; r < dim; ++r) centroid += poly.vertices[simplex[r]];
    weighted += vol * centroid / (dim + 1);
    total += vol;
  }
  return weighted / total;
}

Rational volume(const CanonicalPolytope& poly) {
  const int dim = poly.fan.dim();
  Rational factorial = 1;
  for (int k = 2; k <= dim; ++k) factorial *= k;
  Rational total = 0;
  for (const auto& simplex : star_triangulation(poly)) {
    RatMat m(dim, dim);
    for (int r = 0; r < dim; ++r) m.row(r) = poly.vertices[simplex[r]].transpose();
    Rational vol = linalg::determinant(m);
    if (vol < 0) vol = -vol;
    total += vol;
  }
  return total / factorial;
}

}  // namespace homtoric
