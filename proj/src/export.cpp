#include "pzeros/export.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"
#include "pzeros/errors.hpp"

namespace pzeros {

namespace {

using json = nlohmann::ordered_json;
using cdouble = std::complex<double>;

json pair_json(cdouble z) { return json::array({z.real(), z.imag()}); }

json index_json(const CandidateIndex& c) { return json{{"h", c.h}, {"k", c.k}}; }

json family_json(const ExponentSequence& seq) {
  json j{{"name", seq.name()}};
  switch (seq.kind()) {
    case FamilyKind::AllParts: j["kind"] = "all-parts"; break;
    case FamilyKind::Residue:
      j["kind"] = "residue";
      j["a"] = seq.a();
      j["p"] = seq.p();
      break;
    case FamilyKind::QuadraticUnits:
      j["kind"] = "quadratic-units";
      j["p"] = seq.p();
      break;
    case FamilyKind::Explicit:
      j["kind"] = "explicit";
      j["parts"] = seq.parts();
      break;
  }
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string row(std::initializer_list<std::string> fields) {
  std::string s;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) s += ',';
    s += csv_field(f);
    first = false;
  }
  s += '\n';
  return s;
}

std::string flag(bool b) { return b ? "1" : "0"; }

json curve_json(const ExponentSequence& seq, const CurvePolyline& c) {
  json pts = json::array();
  for (cdouble z : c.to_double()) pts.push_back(pair_json(z));
  json junctions = json::array();
  for (const auto& jn : c.junctions)
    junctions.push_back({{"point", pair_json({jn.point.re.to_double(), jn.point.im.to_double()})},
                         {"with", index_json(jn.with)},
                         {"index", jn.index}});
  return json{{"family", seq.name()},
              {"pair", to_string(c.pair)},
              {"label", c.label},
              {"stop", to_string(c.stop)},
              {"residual_max", c.residual_max()},
              {"junctions", junctions},
              {"points", pts}};
}

json segment_json(const Segment& s) {
  return json{{"label", s.label}, {"from", pair_json(s.from)}, {"to", pair_json(s.to)}};
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw ValidationError("format must be csv or json, got '" + std::string(text) + "'");
}

std::string to_string(Format f) { return f == Format::Csv ? "csv" : "json"; }

std::string format_shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string coefficients_csv(const std::vector<PartitionPolynomial>& polys) {
  std::string s = "n,k,coefficient\n";
  for (const auto& F : polys)
    for (std::size_t k = 0; k < F.coeffs.size(); ++k)
      s += std::to_string(F.n) + "," + std::to_string(k) + "," + F.coeffs[k].get_str() + "\n";
  return s;
}

std::string coefficients_json(const ExponentSequence& seq, const std::vector<PartitionPolynomial>& polys) {
  json list = json::array();
  for (const auto& F : polys) {
    json c = json::array();
    for (const auto& v : F.coeffs) c.push_back(v.get_str());
    list.push_back({{"n", F.n}, {"degree", F.degree()}, {"coefficients", c}});
  }
  return dump(json{{"family", family_json(seq)}, {"count", polys.size()}, {"polynomials", list}});
}

std::string roots_csv(const RootSet& roots, int digits) {
  std::string s = "n,re,im,residual\n";
  const std::string n = std::to_string(roots.n);
  for (long i = 0; i < roots.zero_multiplicity_at_origin; ++i) s += n + ",0,0,0\n";
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    s += n + "," + roots.roots[i].re.str(digits) + "," + roots.roots[i].im.str(digits) + "," +
         format_shortest(roots.residuals[i]) + "\n";
  return s;
}

std::string roots_json(const ExponentSequence& seq, const RootSet& roots, int digits) {
  json list = json::array();
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    list.push_back({{"re", roots.roots[i].re.str(digits)},
                    {"im", roots.roots[i].im.str(digits)},
                    {"residual", roots.residuals[i]}});
  return dump(json{{"family", family_json(seq)},
                   {"n", roots.n},
                   {"degree", roots.degree},
                   {"zero_multiplicity_at_origin", roots.zero_multiplicity_at_origin},
                   {"precision_bits", roots.precision_bits},
                   {"digits", digits},
                   {"iterations", roots.iterations},
                   {"escalations", roots.escalations},
                   {"residual_bound", roots.residual_bound},
                   {"roots", list}});
}

std::string phase_grid_csv(const PhaseGrid& grid) {
  std::string s = "re,im,winner_k,winner_h,margin,tie,boundary\n";
  for (const auto& p : grid.points)
    s += format_shortest(p.z.real()) + "," + format_shortest(p.z.imag()) + "," + std::to_string(p.winner.k) + "," +
         std::to_string(p.winner.h) + "," + format_shortest(p.margin) + "," + flag(p.tie) + "," + flag(p.boundary) +
         "\n";
  return s;
}

std::string phase_grid_json(const PhaseGrid& grid) {
  json pts = json::array();
  for (const auto& p : grid.points)
    pts.push_back({{"re", p.z.real()},
                   {"im", p.z.imag()},
                   {"r", p.r},
                   {"t", p.t},
                   {"winner", index_json(p.winner)},
                   {"runner_up", index_json(p.runner_up)},
                   {"margin", p.margin},
                   {"tie", p.tie},
                   {"boundary", p.boundary}});
  return dump(json{{"family", family_json(grid.family)},
                   {"resolution", grid.resolution},
                   {"tolerance", grid.boundary_tol},
                   {"precision_bits", grid.bits},
                   {"spacing", grid.spacing()},
                   {"points", pts}});
}

std::string curves_csv(const std::vector<CurvePolyline>& curves) {
  std::string s = "curve,pair,re,im,residual\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const auto pts = curves[c].to_double();
    const std::string pair = csv_field(to_string(curves[c].pair));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double res = i < curves[c].residuals.size() ? curves[c].residuals[i] : 0.0;
      s += std::to_string(c) + "," + pair + "," + format_shortest(pts[i].real()) + "," +
           format_shortest(pts[i].imag()) + "," + format_shortest(res) + "\n";
    }
  }
  return s;
}

std::string curves_json(const ExponentSequence& seq, const std::vector<CurvePolyline>& curves) {
  json list = json::array();
  for (const auto& c : curves) list.push_back(curve_json(seq, c));
  return dump(json{{"family", family_json(seq)}, {"curves", list}});
}

std::string attractor_csv(const AttractorSet& A, int circle_samples) {
  std::string s = "re,im,label\n";
  auto put = [&](cdouble z, const std::string& label) {
    s += format_shortest(z.real()) + "," + format_shortest(z.imag()) + "," + csv_field(label) + "\n";
  };
  if (A.circle)
    for (int j = 0; j < circle_samples; ++j) put(std::polar(1.0, 2.0 * M_PI * j / circle_samples), "unit circle");
  for (const auto& sp : A.spokes)
    for (cdouble z : sp.samples) put(z, sp.label);
  for (const auto& sg : A.segments)
    for (cdouble z : sg.samples) put(z, sg.label);
  for (const auto& c : A.curves)
    for (cdouble z : c.to_double()) put(z, c.label);
  for (cdouble z : A.junctions) put(z, "junction");
  return s;
}

std::string attractor_json(const AttractorSet& A) {
  json spokes = json::array(), segments = json::array(), curves = json::array(), junctions = json::array();
  for (const auto& sp : A.spokes) spokes.push_back(segment_json(sp));
  for (const auto& sg : A.segments) segments.push_back(segment_json(sg));
  for (const auto& c : A.curves) curves.push_back(curve_json(A.family, c));
  for (cdouble z : A.junctions) junctions.push_back(pair_json(z));
  return dump(json{{"family", family_json(A.family)},
                   {"circle", A.circle},
                   {"spokes", spokes},
                   {"segments", segments},
                   {"curves", curves},
                   {"junctions", junctions}});
}

std::string asymptotics_csv(const std::vector<AsymptoticCheck>& rows) {
  std::string s = "re,im,n,winner_k,winner_h,branch_cut,log_abs_exact,log_abs_estimate,log_error\n";
  for (const auto& r : rows)
    s += format_shortest(r.z.real()) + "," + format_shortest(r.z.imag()) + "," + std::to_string(r.n) + "," +
         std::to_string(r.winner.k) + "," + std::to_string(r.winner.h) + "," + flag(r.branch_cut) + "," +
         format_shortest(r.log_abs_exact) + "," + format_shortest(r.log_abs_estimate) + "," +
         format_shortest(r.log_error) + "\n";
  return s;
}

std::string asymptotics_json(const ExponentSequence& seq, const std::vector<AsymptoticCheck>& rows) {
  json list = json::array();
  for (const auto& r : rows)
    list.push_back({{"z", pair_json(r.z)},
                    {"n", r.n},
                    {"winner", index_json(r.winner)},
                    {"branch_cut", r.branch_cut},
                    {"log_abs_exact", r.log_abs_exact},
                    {"log_abs_estimate", r.log_abs_estimate},
                    {"log_error", r.log_error}});
  return dump(json{{"family", family_json(seq)}, {"rows", list}});
}

std::string report_csv(const std::vector<CheckGroup>& groups) {
  std::string s = "group,check,passed,gating,detail\n";
  for (const auto& g : groups)
    for (const auto& c : g.checks) s += row({std::to_string(g.id), c.name, flag(c.passed), flag(c.gating), c.detail});
  return s;
}

std::string report_json(const ExponentSequence& seq, long max_n, const std::vector<CheckGroup>& groups) {
  json list = json::array();
  std::size_t violations = 0, total = 0;
  for (const auto& g : groups) {
    json checks = json::array();
    for (const auto& c : g.checks) {
      ++total;
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"gating", c.gating}, {"detail", c.detail}});
    }
    violations += g.violations();
    list.push_back({{"id", g.id}, {"title", g.title}, {"passed", g.passed()}, {"checks", checks}});
  }
  return dump(json{{"family", family_json(seq)},
                   {"max_n", max_n},
                   {"checks", total},
                   {"violations", violations},
                   {"passed", violations == 0},
                   {"groups", list}});
}

}  // namespace pzeros
