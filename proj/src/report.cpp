#include "hypertri/report.hpp"

#include <sstream>

#include "hypertri/classes.hpp"
#include "hypertri/cycles.hpp"
#include "hypertri/iso.hpp"

namespace hypertri {

namespace {

template <int Dim>
CycleSummary summarize(const std::vector<RidgeCycle<Dim>>& cycles) {
  CycleSummary s;
  s.count = cycles.size();
  s.lengths = length_histogram(cycles);
  for (const auto& [cls, n] : return_histogram(cycles)) s.returns[to_string(cls)] = n;
  return s;
}

nlohmann::ordered_json to_json(const CycleSummary& s) {
  nlohmann::ordered_json lengths = nlohmann::ordered_json::object();
  for (const auto& [len, n] : s.lengths) lengths[std::to_string(len)] = n;
  nlohmann::ordered_json returns = nlohmann::ordered_json::object();
  for (const auto& [cls, n] : s.returns) returns[cls] = n;
  return {{"count", s.count}, {"length_histogram", lengths}, {"return_class_histogram", returns}};
}

nlohmann::ordered_json to_json(const TetrahedralCertificate& c) {
  nlohmann::ordered_json cusps = nlohmann::ordered_json::array();
  for (const auto& s : c.cusp_surfaces) cusps.push_back(to_json(s));
  return {{"granted", c.granted()},
          {"all_valence_six", c.all_valence_six},
          {"all_returns_trivial", c.all_returns_trivial},
          {"orientable", c.orientable},
          {"tetrahedra", c.num_tetrahedra},
          {"edges", c.num_edges},
          {"num_cusps", c.num_cusps},
          {"cusp_surfaces", cusps},
          {"volume", tet_multiple_decimal(c.num_tetrahedra)}};
}

nlohmann::ordered_json to_json(const ValidationReport& v) {
  nlohmann::ordered_json unpaired = nlohmann::ordered_json::array();
  for (const auto& u : v.unpaired) unpaired.push_back({u.simplex, u.facet});
  return {{"num_simplices", v.num_simplices},
          {"num_gluings", v.num_gluings},
          {"closed", v.closed},
          {"unpaired", unpaired}};
}

nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"value", r.str()}, {"integer", r.is_integer()}};
}

}  // namespace

bool AnalysisReport::holds() const {
  if (!validity.closed) return false;
  if (dimension == 3) return certificate && certificate->granted();
  return six_valent && manifold;
}

AnalysisReport analyze(const Triangulation4& t) {
  AnalysisReport r;
  r.dimension = 4;
  r.validity = validate(t);
  r.orientable = is_orientable(t);
  if (!t.closed()) return r;

  const auto cycles = face_cycles(t);
  r.cycles = summarize(cycles);
  r.six_valent = std::all_of(cycles.begin(), cycles.end(), [](const auto& c) { return c.length() == 6; });
  r.manifold = std::all_of(cycles.begin(), cycles.end(),
                           [](const auto& c) { return c.return_map.is_identity(); });
  r.volume = exact_volume(t);
  r.euler_characteristic = euler_characteristic(t);
  if (!r.euler_characteristic->is_integer())
    r.warnings.push_back("euler characteristic " + r.euler_characteristic->str() +
                         " is not an integer: cannot be 6-valent with trivial returns");

  for (const auto& vc : vertex_classes(t)) {
    const Triangulation3 link = vertex_link(t, vc);
    r.boundary_components.push_back({vc.size(), tetrahedral_certificate(link), signature(link)});
  }
  for (const auto& ec : edge_classes(t)) r.cusps.push_back({ec.size(), classify(cusp_surface4(t, ec))});
  return r;
}

AnalysisReport analyze(const Triangulation3& t) {
  AnalysisReport r;
  r.dimension = 3;
  r.validity = validate(t);
  r.orientable = is_orientable(t);
  if (!t.closed()) return r;
  r.cycles = summarize(edge_cycles3(t));
  r.certificate = tetrahedral_certificate(t);
  r.signature = signature(t);
  return r;
}

nlohmann::ordered_json to_json(const SurfaceClass& s) {
  return {{"triangles", s.triangles}, {"chi", s.chi}, {"orientable", s.orientable}, {"class", s.name()}};
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["report_version"] = kReportVersion;
  j["dimension"] = r.dimension;
  j["validity"] = to_json(r.validity);
  j["orientable"] = r.orientable;
  j["holds"] = r.holds();
  if (!r.validity.closed) return j;

  j[r.dimension == 4 ? "face_cycles" : "edge_cycles"] = to_json(*r.cycles);
  if (r.dimension == 3) {
    j["tetrahedral_certificate"] = to_json(*r.certificate);
    j["signature"] = r.signature;
    return j;
  }

  j["six_valent"] = r.six_valent;
  j["manifold"] = r.manifold;
  j["volume"] = {{"pi2_coefficient", r.volume->pi2_coefficient.str()},
                 {"decimal", r.volume->decimal()}};
  j["euler_characteristic"] = rational_json(*r.euler_characteristic);
  const Rational doubled = r.volume->pi2_coefficient * Rational(2);
  j["double_along_boundary"] = {
      {"cells", 2 * r.validity.num_simplices},
      {"volume", {{"pi2_coefficient", doubled.str()}, {"decimal", pi2_multiple_decimal(doubled)}}},
      {"euler_characteristic", rational_json(*r.euler_characteristic * Rational(2))}};
  j["warnings"] = r.warnings;

  nlohmann::ordered_json boundary = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.boundary_components.size(); ++i) {
    const auto& b = r.boundary_components[i];
    boundary.push_back({{"index", i},
                        {"size", b.size},
                        {"tetrahedral_certificate", to_json(b.certificate)},
                        {"signature", b.signature}});
  }
  j["boundary_components"] = boundary;

  nlohmann::ordered_json cusps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.cusps.size(); ++i)
    cusps.push_back({{"index", i}, {"size", r.cusps[i].size}, {"surface", to_json(r.cusps[i].surface)}});
  j["cusps"] = cusps;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "dimension: " << r.dimension << "\n";
  os << "simplices: " << r.validity.num_simplices << "\n";
  os << "gluings: " << r.validity.num_gluings << "\n";
  os << "closed: " << yes(r.validity.closed) << "\n";
  if (!r.validity.closed) {
    os << "not closed: " << r.validity.unpaired.size() << " unpaired facet slot(s):";
    for (const auto& u : r.validity.unpaired) os << ' ' << to_string(u);
    os << "\n";
    os << "orientable: " << yes(r.orientable) << "\n";
    return os.str();
  }
  os << "orientable: " << yes(r.orientable) << "\n";
  os << (r.dimension == 4 ? "face cycles: " : "edge cycles: ") << r.cycles->count << " (lengths";
  for (const auto& [len, n] : r.cycles->lengths) os << ' ' << len << 'x' << n;
  os << "; returns";
  for (const auto& [cls, n] : r.cycles->returns) os << ' ' << cls << 'x' << n;
  os << ")\n";

  if (r.dimension == 3) {
    const auto& c = *r.certificate;
    os << "tetrahedral certificate: " << (c.granted() ? "granted" : "denied") << "\n";
    os << "volume: " << tet_multiple_decimal(c.num_tetrahedra) << "\n";
    os << "cusps: " << c.num_cusps << "\n";
    for (std::size_t i = 0; i < c.cusp_surfaces.size(); ++i)
      os << "  cusp " << i << ": " << c.cusp_surfaces[i].name() << ", " << c.cusp_surfaces[i].triangles
         << " triangles\n";
    os << "signature: " << r.signature << "\n";
    return os.str();
  }

  os << "six-valent: " << yes(r.six_valent) << "\n";
  os << "manifold: " << yes(r.manifold) << "\n";
  os << "volume: " << r.volume->pi2_coefficient << " pi^2 = " << r.volume->decimal() << "\n";
  os << "euler characteristic: " << *r.euler_characteristic << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  os << "boundary components: " << r.boundary_components.size() << "\n";
  for (std::size_t i = 0; i < r.boundary_components.size(); ++i) {
    const auto& b = r.boundary_components[i];
    os << "  component " << i << ": " << b.size << " tetrahedra, certificate "
       << (b.certificate.granted() ? "granted" : "denied") << ", " << b.certificate.num_cusps
       << " cusp(s), signature " << short_hash(b.signature) << "\n";
  }
  os << "cusps: " << r.cusps.size() << "\n";
  for (std::size_t i = 0; i < r.cusps.size(); ++i)
    os << "  cusp " << i << ": " << r.cusps[i].surface.name() << ", " << r.cusps[i].size << " triangles\n";
  return os.str();
}

}  // namespace hypertri
