#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <vector>

#include "homtoric/errors.hpp"
#include "homtoric/fano_criterion.hpp"
#include "homtoric/flag.hpp"
#include "homtoric/toric_fiber.hpp"
#include "homtoric/twist.hpp"

using namespace homtoric;

namespace {

FlagManifold borel(Family f, int r) {
  RootSystem rs = RootSystem::build({SimpleFactor{f, r}});
  return FlagManifold::build(FlagSpec{std::move(rs), RatVec::Constant(r, Rational(1))});
}

RatVec vec(std::initializer_list<Rational> entries) {
  RatVec v(static_cast<int>(entries.size()));
  int i = 0;
  for (const Rational& e : entries) v[i++] = e;
  return v;
}

RatMat mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  RatMat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const Rational& e : row) m(i, j++) = e;
    ++i;
  }
  return m;
}

IntVec ray(std::initializer_list<int> entries) {
  IntVec v(static_cast<int>(entries.size()));
  int i = 0;
  for (int e : entries) v[i++] = e;
  return v;
}

// The projectivization of O + O(n) over the projective line: full flag of
// A1, projective-line fiber, the twist sends the basis coweight to n/2.
struct LineBundle {
  FlagManifold fm;
  Twist twist;
};

LineBundle line_bundle(int n) {
  FlagManifold fm = borel(Family::A, 1);
  Twist twist = validate_twist(fm, mat({{1}}), mat({{Rational(n) / 2}}));
  return LineBundle{std::move(fm), std::move(twist)};
}

// SO(4n)/U(1)xSO(2n-1)xSO(2n-1)... flag: D_{2n} with two central directions,
// projective-plane fiber scaled by 3n on both coordinates.
FlagManifold so_flag(int n) {
  const int r = 2 * n;
  RatVec marks = RatVec::Zero(r);
  marks[n - 1] = -1;
  marks[r - 1] = 4;
  return FlagManifold::build(FlagSpec{RootSystem::build({SimpleFactor{Family::D, r}}), marks});
}

RatMat so_basis(int n) {
  const int r = 2 * n;
  RatMat basis = RatMat::Zero(r, 2);
  basis(n - 1, 0) = 1;
  basis(n - 1, 1) = -1;
  basis(r - 1, 1) = 2;
  return basis;
}

// Expected margin multiset at a polytope vertex q, derived independently in
// the Euclidean picture of D_{2n}: the center is spanned by v1 = e_1+..+e_n
// and v2 = e_{n+1}+..+e_{2n}; the criterion point has v1/v2 coordinates
// (A, B) = ((n-1+3q_1)/D, (3n-1+3q_2)/D) with D = 4(2n-1), and the four
// chamber classes restrict to 2A, A+B, 2B and B-A.
std::vector<Rational> so_expected_margins(int n, const RatVec& q) {
  const Rational D = 4 * (2 * n - 1);
  const Rational A = (Rational(n - 1) + 3 * q[0]) / D;
  const Rational B = (Rational(3 * n - 1) + 3 * q[1]) / D;
  std::vector<Rational> out{2 * A, A + B, 2 * B, B - A};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> sorted_row(const RatMat& m, int row) {
  std::vector<Rational> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m(row, j));
  std::sort(out.begin(), out.end());
  return out;
}

Fan cp1xcp1() {
  Fan f;
  f.dim = 2;
  f.rays = {ray({1, 0}), ray({0, 1}), ray({-1, 0}), ray({0, -1})};
  f.cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return f;
}

Fan hirzebruch_surface(int a) {
  Fan f;
  f.dim = 2;
  f.rays = {ray({1, 0}), ray({0, 1}), ray({-1, a}), ray({0, -1})};
  f.cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return f;
}

}  // namespace

TEST_CASE("criterion point of the origin is the anticanonical element") {
  const LineBundle lb = line_bundle(3);
  CHECK(vec_eq(criterion_point(lb.fm, lb.twist, vec({0})), lb.fm.kahler_einstein_element()));
}

TEST_CASE("line bundle projectivizations over the projective line") {
  // Margins are (2-n)/4 and (2+n)/4 at the two fiber vertices.
  for (int n = 0; n <= 4; ++n) {
    const LineBundle lb = line_bundle(n);
    const FanoReport r = evaluate_criterion(lb.fm, make_cpm_fan(1), lb.twist);
    CHECK(r.fiber_fano);
    REQUIRE(r.min_margin.has_value());
    CHECK(*r.min_margin == Rational(2 - n) / 4);
    CHECK(r.verdict == (n < 2));
    CHECK(r.boundary == (n == 2));
    CHECK(mat_eq(r.margins, mat({{Rational(2 - n) / 4}, {Rational(2 + n) / 4}})));
    CHECK(r.integral_twist == (n % 2 == 0));
    REQUIRE(r.functionals.size() == 1);
    CHECK(r.functionals[0].num_roots == 1);
    CHECK(r.functionals[0].representative[0] == 1);
    REQUIRE(r.fiber_barycenter.has_value());
    CHECK((*r.fiber_barycenter)[0] == 0);
  }
}

TEST_CASE("failures list every non-positive margin") {
  const LineBundle flat = line_bundle(2);
  const FanoReport r2 = evaluate_criterion(flat.fm, make_cpm_fan(1), flat.twist);
  REQUIRE(r2.failures.size() == 1);
  CHECK(r2.failures[0].vertex == 0);
  CHECK(r2.failures[0].functional == 0);
  CHECK(r2.failures[0].margin == 0);

  const LineBundle steep = line_bundle(3);
  const FanoReport r3 = evaluate_criterion(steep.fm, make_cpm_fan(1), steep.twist);
  REQUIRE(r3.failures.size() == 1);
  CHECK(r3.failures[0].margin == Rational(-1) / 4);
}

TEST_CASE("projective plane bundles over D-type flags") {
  for (int n : {4, 5}) {
    const FlagManifold fm = so_flag(n);
    RatMat images = RatMat::Zero(2, 2);
    images(0, 0) = 3 * n;
    images(1, 1) = 3 * n;
    const Twist twist = validate_twist(fm, so_basis(n), std::move(images));
    const FanoReport r = evaluate_criterion(fm, make_cpm_fan(2), twist);

    CHECK(r.fiber_fano);
    CHECK(r.integral_twist);
    REQUIRE(r.polytope_vertices.size() == 3);
    REQUIRE(r.functionals.size() == 4);
    for (int v = 0; v < 3; ++v) {
      CHECK(sorted_row(r.margins, v) == so_expected_margins(n, r.polytope_vertices[v]));
    }
    REQUIRE(r.min_margin.has_value());
    CHECK(*r.min_margin == Rational(2 * n - 9) / (4 * (2 * n - 1)));
    CHECK(r.verdict == (n >= 5));
    CHECK_FALSE(r.boundary);
  }
}

TEST_CASE("D-type failure accounting at n = 4") {
  const FlagManifold fm = so_flag(4);
  RatMat images = RatMat::Zero(2, 2);
  images(0, 0) = 12;
  images(1, 1) = 12;
  const Twist twist = validate_twist(fm, so_basis(4), std::move(images));
  const FanoReport r = evaluate_criterion(fm, make_cpm_fan(2), twist);
  // Two classes vanish (2A = 0 at the vertices with q_1 = -1) and one is
  // negative, so the verdict is negative without being a boundary case.
  REQUIRE(r.failures.size() == 3);
  int zeros = 0;
  int negatives = 0;
  for (const MarginFailure& f : r.failures) {
    if (f.margin == 0) ++zeros;
    if (f.margin < 0) ++negatives;
  }
  CHECK(zeros == 2);
  CHECK(negatives == 1);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.boundary);
}

TEST_CASE("untwisted product of a full A2 flag with the projective plane") {
  const FlagManifold fm = borel(Family::A, 2);
  const Twist twist = validate_twist(fm, RatMat::Identity(2, 2), RatMat::Zero(2, 2));
  const FanoReport r = evaluate_criterion(fm, make_cpm_fan(2), twist);
  CHECK(r.verdict);
  REQUIRE(r.min_margin.has_value());
  CHECK(*r.min_margin == Rational(1) / 3);
  // Every criterion point is z_V itself.
  for (const RatVec& p : r.criterion_points) {
    CHECK(vec_eq(p, fm.kahler_einstein_element()));
  }
  // Margins are the root classes on z_V: 1/3, 1/3, 2/3 at every vertex.
  for (int v = 0; v < r.margins.rows(); ++v) {
    const std::vector<Rational> row = sorted_row(r.margins, v);
    CHECK(row == std::vector<Rational>{Rational(1) / 3, Rational(1) / 3, Rational(2) / 3});
  }
}

TEST_CASE("product of two line factors with a quadric surface fiber") {
  RatVec marks(2);
  marks << 1, 1;
  const FlagManifold fm = FlagManifold::build(
      FlagSpec{RootSystem::build({SimpleFactor{Family::A, 1}, SimpleFactor{Family::A, 1}}), marks});
  const Twist twist =
      validate_twist(fm, RatMat::Identity(2, 2),
                     mat({{Rational(1) / 2, 0}, {0, Rational(1) / 2}}));
  const FanoReport r = evaluate_criterion(fm, cp1xcp1(), twist);
  CHECK(r.verdict);
  REQUIRE(r.min_margin.has_value());
  CHECK(*r.min_margin == Rational(1) / 4);
  REQUIRE(r.margins.rows() == 4);
  REQUIRE(r.margins.cols() == 2);
  for (int v = 0; v < 4; ++v) {
    for (int f = 0; f < 2; ++f) {
      const Rational m = r.margins(v, f);
      CHECK((m == Rational(1) / 4 || m == Rational(3) / 4));
    }
  }
}

TEST_CASE("criterion points depend affinely on the fiber vertex") {
  for (int n : {1, 2, 3}) {
    const LineBundle lb = line_bundle(n);
    const RatVec q1 = vec({-1});
    const RatVec q2 = vec({1});
    const RatVec mid = (q1 + q2) / 2;
    const RatVec expect =
        (criterion_point(lb.fm, lb.twist, q1) + criterion_point(lb.fm, lb.twist, q2)) / 2;
    CHECK(vec_eq(criterion_point(lb.fm, lb.twist, mid), expect));
  }
}

TEST_CASE("changing the twist basis does not change the report") {
  const FlagManifold fm = so_flag(2);
  RatMat images = RatMat::Zero(2, 2);
  images(0, 0) = 6;
  images(1, 1) = 6;
  const Twist t1 = validate_twist(fm, so_basis(2), images);

  // Transform the basis by S = [[1,1],[0,1]] and the images by S^T.
  RatMat s(2, 2);
  s << 1, 1, 0, 1;
  const Twist t2 = validate_twist(fm, so_basis(2) * s, s.transpose() * images);

  const FanoReport r1 = evaluate_criterion(fm, make_cpm_fan(2), t1);
  const FanoReport r2 = evaluate_criterion(fm, make_cpm_fan(2), t2);
  CHECK(r1.verdict == r2.verdict);
  CHECK(*r1.min_margin == *r2.min_margin);
  CHECK(mat_eq(r1.margins, r2.margins));
  REQUIRE(r1.criterion_points.size() == r2.criterion_points.size());
  for (std::size_t i = 0; i < r1.criterion_points.size(); ++i) {
    CHECK(vec_eq(r1.criterion_points[i], r2.criterion_points[i]));
  }
}

TEST_CASE("a non-Fano fiber short-circuits the verdict") {
  const FlagManifold fm = borel(Family::A, 1);
  const Twist twist = validate_twist(fm, mat({{1}}), RatMat::Zero(1, 2));
  const FanoReport r = evaluate_criterion(fm, hirzebruch_surface(2), twist);
  CHECK_FALSE(r.fiber_fano);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.boundary);
  CHECK_FALSE(r.min_margin.has_value());
  CHECK_FALSE(r.fiber_barycenter.has_value());
  CHECK(r.margins.size() == 0);
  CHECK(r.criterion_points.empty());
  CHECK(r.polytope_vertices.empty());
}

TEST_CASE("fan and twist dimensions must agree") {
  const FlagManifold fm = borel(Family::A, 1);
  const Twist twist = validate_twist(fm, mat({{1}}), mat({{1}}));
  CHECK_THROWS_AS(evaluate_criterion(fm, make_cpm_fan(2), twist), DimensionMismatch);
}

TEST_CASE("the fiber fan is validated before the criterion runs") {
  const FlagManifold fm = borel(Family::A, 1);
  const Twist twist = validate_twist(fm, mat({{1}}), RatMat::Zero(1, 2));
  Fan bad = cp1xcp1();
  bad.rays[0] = ray({2, 0});
  CHECK_THROWS_AS(evaluate_criterion(fm, bad, twist), NonPrimitiveRay);
}
