#include "homtoric/fano_criterion.hpp"

#include "homtoric/errors.hpp"
#include "homtoric/linalg.hpp"

namespace homtoric {

RatVec criterion_point(const FlagManifold& fm, const Twist& twist, const RatVec& vertex) {
  const RatVec pullback = pullback_vertex(twist, vertex);
  const RatVec w = linalg::solve(twist.z_gram(), pullback);
  return fm.kahler_einstein_element() + twist.basis() * w;
}

FanoReport evaluate_criterion(const FlagManifold& fm, const Fan& fiber, const Twist& twist) {
  const ValidatedFan fan = validate_fan(fiber);
  if (fan.dim() != twist.fiber_dim()) {
    throw DimensionMismatch("fiber dimension " + std::to_string(fan.dim()) +
                            " does not match the twist images (" +
                            std::to_string(twist.fiber_dim()) + ")");
  }

  FanoReport report;
  report.integral_twist = twist.integral_images();
  report.fiber_fano = is_fano(fan);
  if (!report.fiber_fano) {
    report.verdict = false;
    return report;
  }

  const CanonicalPolytope poly = canonical_polytope(fan);
  report.polytope_vertices = poly.vertices;
  report.fiber_barycenter = barycenter(poly);

  const auto& roots = fm.root_system().roots();
  for (const ChamberFunctional& cf : fm.chamber()) {
    FunctionalInfo info;
    info.on_basis = cf.on_basis;
    info.representative = roots[cf.roots.front()].coords;
    info.num_roots = static_cast<int>(cf.roots.size());
    report.functionals.push_back(std::move(info));
  }

  const int nv = static_cast<int>(poly.vertices.size());
  const int nf = static_cast<int>(report.functionals.size());
  report.margins.resize(nv, nf);
  Rational min_margin;
  bool first = true;
  for (int v = 0; v < nv; ++v) {
    const RatVec p = criterion_point(fm, twist, poly.vertices[v]);
    report.criterion_points.push_back(p);
    for (int f = 0; f < nf; ++f) {
      // Margins are basis independent: evaluate the representative root
      // on p directly rather than through z(k) coordinates.
      const IntVec& rep = report.functionals[f].representative;
      Rational margin = 0;
      for (int k = 0; k < rep.size(); ++k) {
        if (rep[k] != 0) margin += Rational(rep[k]) * p[k];
      }
      report.margins(v, f) = margin;
      if (first || margin < min_margin) {
        min_margin = margin;
        first = false;
      }
      if (margin <= 0) report.failures.push_back({v, f, margin});
    }
  }
  report.min_margin = min_margin;
  report.boundary = (min_margin == 0);
  report.verdict = (min_margin > 0);
  return report;
}

}  // namespace homtoric
