#include "homtoric/report.hpp"

#include <sstream>

#include <json.hpp>

#include "homtoric/errors.hpp"

namespace homtoric {

namespace {

using nlohmann::json;

std::string format_vec(const RatVec& v) {
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_rational(v[i]);
  }
  return out + ")";
}

std::string format_vec(const IntVec& v) {
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

json json_vec(const RatVec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(format_rational(v[i]));
  return out;
}

json json_vec(const IntVec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

std::string group_name(const std::vector<SimpleFactor>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += " x ";
    out += factor_name(factors[i]);
  }
  return out;
}

json flag_json(const FlagManifold& fm) {
  json out;
  json group = json::array();
  for (const SimpleFactor& f : fm.root_system().factors()) group.push_back(factor_name(f));
  out["group"] = std::move(group);
  out["rank"] = fm.root_system().total_rank();
  out["marks"] = json_vec(fm.marks());
  out["num_roots"] = fm.root_system().roots().size();
  out["isotropy_roots"] = fm.isotropy_roots().size();
  out["moved_positive_roots"] = fm.moved_positive_roots().size();
  out["z_dim"] = fm.z_dim();
  json basis = json::array();
  for (int c = 0; c < fm.z_basis().cols(); ++c) basis.push_back(json_vec(RatVec(fm.z_basis().col(c))));
  out["z_basis"] = std::move(basis);
  out["z_v"] = json_vec(fm.kahler_einstein_element());
  json chamber = json::array();
  for (const ChamberFunctional& cf : fm.chamber()) {
    const IntVec& rep = fm.root_system().roots()[cf.roots.front()].coords;
    chamber.push_back({{"on_basis", json_vec(cf.on_basis)},
                       {"representative_root", json_vec(rep)},
                       {"num_roots", cf.roots.size()}});
  }
  out["chamber"] = std::move(chamber);
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit_report(const ProblemSpec& spec, const Evaluation& ev, OutputFormat format) {
  const FanoReport& r = ev.report;
  if (format == OutputFormat::json) {
    json out;
    out["verdict"] = r.verdict;
    out["fiber_fano"] = r.fiber_fano;
    out["boundary"] = r.boundary;
    out["min_margin"] = r.min_margin ? json(format_rational(*r.min_margin)) : json(nullptr);
    out["flag"] = flag_json(ev.flag);
    out["twist"] = {{"integral_images", r.integral_twist}};

    json fiber;
    fiber["fano"] = r.fiber_fano;
    if (r.fiber_fano) {
      json vertices = json::array();
      for (const RatVec& v : r.polytope_vertices) vertices.push_back(json_vec(v));
      fiber["vertices"] = std::move(vertices);
      fiber["barycenter"] = json_vec(*r.fiber_barycenter);
    }
    out["fiber"] = std::move(fiber);

    json points = json::array();
    for (const RatVec& p : r.criterion_points) points.push_back(json_vec(p));
    out["criterion_points"] = std::move(points);

    json functionals = json::array();
    for (const FunctionalInfo& f : r.functionals) {
      functionals.push_back({{"on_basis", json_vec(f.on_basis)},
                             {"representative_root", json_vec(f.representative)},
                             {"num_roots", f.num_roots}});
    }
    out["chamber"] = std::move(functionals);

    json margins = json::array();
    for (int v = 0; v < r.margins.rows(); ++v) {
      margins.push_back(json_vec(RatVec(r.margins.row(v).transpose())));
    }
    out["margins"] = std::move(margins);

    json failures = json::array();
    for (const MarginFailure& f : r.failures) {
      failures.push_back(
          {{"vertex", f.vertex}, {"functional", f.functional}, {"margin", format_rational(f.margin)}});
    }
    out["failures"] = std::move(failures);
    return dump(out);
  }

  std::ostringstream out;
  out << "verdict: " << (r.verdict ? "Fano" : "not Fano") << "\n";
  out << "fiber Fano: " << (r.fiber_fano ? "yes" : "no") << "\n";
  if (r.min_margin) out << "min margin: " << format_rational(*r.min_margin) << "\n";
  if (r.boundary) out << "boundary contact: a margin vanishes exactly\n";

  const FlagManifold& fm = ev.flag;
  out << "group: " << group_name(spec.group) << ", rank " << fm.root_system().total_rank() << "\n";
  out << "flag: " << fm.root_system().roots().size() << " roots, isotropy "
      << fm.isotropy_roots().size() << ", moved positive " << fm.moved_positive_roots().size()
      << ", dim z(k) = " << fm.z_dim() << "\n";
  out << "z_V = " << format_vec(fm.kahler_einstein_element()) << "\n";
  if (!r.integral_twist) {
    out << "warning: twist images are not integral on the supplied basis; "
           "integrality at the group level is not certified\n";
  }

  if (!r.fiber_fano) {
    out << "the fiber is not Fano, so the total space cannot be Fano\n";
    return out.str();
  }

  out << "polytope vertices (" << r.polytope_vertices.size() << "):\n";
  for (std::size_t i = 0; i < r.polytope_vertices.size(); ++i) {
    out << "  q" << i << " = " << format_vec(r.polytope_vertices[i]) << "\n";
  }
  out << "fiber barycenter: " << format_vec(*r.fiber_barycenter) << "\n";
  out << "criterion points:\n";
  for (std::size_t i = 0; i < r.criterion_points.size(); ++i) {
    out << "  p" << i << " = " << format_vec(r.criterion_points[i]) << "\n";
  }
  out << "chamber margins (functional | margins at q0, q1, ...):\n";
  for (std::size_t f = 0; f < r.functionals.size(); ++f) {
    out << "  f" << f << " = " << format_vec(r.functionals[f].on_basis) << " ["
        << r.functionals[f].num_roots << (r.functionals[f].num_roots == 1 ? " root]:" : " roots]:");
    for (int v = 0; v < r.margins.rows(); ++v) {
      out << " " << format_rational(r.margins(v, static_cast<int>(f)));
    }
    out << "\n";
  }
  for (const MarginFailure& f : r.failures) {
    out << "violation: vertex q" << f.vertex << ", functional f" << f.functional << ", margin "
        << format_rational(f.margin) << "\n";
  }
  return out.str();
}

std::string emit_flag_info(const FlagManifold& fm, OutputFormat format) {
  if (format == OutputFormat::json) return dump(flag_json(fm));

  std::ostringstream out;
  out << "group: " << group_name(fm.root_system().factors()) << ", rank "
      << fm.root_system().total_rank() << "\n";
  out << "roots: " << fm.root_system().roots().size() << " (isotropy "
      << fm.isotropy_roots().size() << ", moved positive " << fm.moved_positive_roots().size()
      << ")\n";
  out << "dim z(k): " << fm.z_dim() << "\n";
  out << "z(k) basis:\n";
  for (int c = 0; c < fm.z_basis().cols(); ++c) {
    out << "  b" << c << " = " << format_vec(RatVec(fm.z_basis().col(c))) << "\n";
  }
  out << "z_V = " << format_vec(fm.kahler_einstein_element()) << "\n";
  out << "chamber functionals:\n";
  const auto& chamber = fm.chamber();
  for (std::size_t f = 0; f < chamber.size(); ++f) {
    const IntVec& rep = fm.root_system().roots()[chamber[f].roots.front()].coords;
    out << "  f" << f << " = " << format_vec(chamber[f].on_basis) << ", " << chamber[f].roots.size()
        << (chamber[f].roots.size() == 1 ? " root" : " roots") << ", representative "
        << format_vec(rep) << "\n";
  }
  return out.str();
}

std::string emit_polytope(const CanonicalPolytope& poly, OutputFormat format) {
  const RatVec center = barycenter(poly);
  const Rational vol = volume(poly);
  if (format == OutputFormat::json) {
    json out;
    out["fano"] = true;
    out["dim"] = poly.fan.dim();
    json vertices = json::array();
    for (const RatVec& v : poly.vertices) vertices.push_back(json_vec(v));
    out["vertices"] = std::move(vertices);
    out["barycenter"] = json_vec(center);
    out["volume"] = format_rational(vol);
    return dump(out);
  }

  std::ostringstream out;
  out << "fan: dim " << poly.fan.dim() << ", " << poly.fan.rays().size() << " rays, "
      << poly.fan.cones().size() << " maximal cones\n";
  out << "Fano: yes\n";
  out << "vertices:\n";
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    out << "  q" << i << " = " << format_vec(poly.vertices[i]) << "\n";
  }
  out << "barycenter: " << format_vec(center) << "\n";
  out << "volume: " << format_rational(vol) << "\n";
  return out.str();
}

std::vector<SweepRow> sweep(const std::string& preset, int lo, int hi) {
  if (lo > hi) throw SyntaxError("sweep range is empty");
  std::vector<SweepRow> rows;
  for (int n = lo; n <= hi; ++n) {
    const Evaluation ev = evaluate(make_preset(preset, n));
    rows.push_back(SweepRow{n, ev.report.verdict, ev.report.boundary, ev.report.min_margin});
  }
  return rows;
}

std::string emit_sweep(const std::string& preset, const std::vector<SweepRow>& rows,
                       OutputFormat format) {
  if (format == OutputFormat::json) {
    json out;
    out["preset"] = preset;
    json jrows = json::array();
    for (const SweepRow& row : rows) {
      jrows.push_back({{"n", row.n},
                       {"verdict", row.verdict},
                       {"boundary", row.boundary},
                       {"min_margin",
                        row.min_margin ? json(format_rational(*row.min_margin)) : json(nullptr)}});
    }
    out["rows"] = std::move(jrows);
    return dump(out);
  }

  std::ostringstream out;
  out << "preset: " << preset << "\n";
  out << "   n  verdict   min margin\n";
  for (const SweepRow& row : rows) {
    std::string n = std::to_string(row.n);
    out << std::string(n.size() < 4 ? 4 - n.size() : 0, ' ') << n << "  "
        << (row.verdict ? "Fano    " : "not Fano") << "  "
        << (row.min_margin ? format_rational(*row.min_margin) : std::string("-"));
    if (row.boundary) out << "  (boundary)";
    out << "\n";
  }
  return out.str();
}

}  // namespace homtoric
