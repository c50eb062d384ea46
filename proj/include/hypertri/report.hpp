#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypertri/link.hpp"
#include "hypertri/rational.hpp"
#include "hypertri/triangulation.hpp"
#include "hypertri/volume.hpp"

namespace hypertri {

inline constexpr int kReportVersion = 1;

struct CycleSummary {
  std::size_t count = 0;
  std::map<std::size_t, std::size_t> lengths;
  std::map<std::string, std::size_t> returns;
};

struct BoundaryComponent {
  std::size_t size = 0;
  TetrahedralCertificate certificate;
  std::string signature;
};

struct Cusp {
  std::size_t size = 0;
  SurfaceClass surface;
};

/// Everything known about one triangulation. Blocks past `validity` are
/// filled only when the input is closed.
struct AnalysisReport {
  int dimension = 4;
  ValidationReport validity;
  std::optional<CycleSummary> cycles;  // face cycles (4D) or edge cycles (3D)
  bool orientable = false;
  std::vector<std::string> warnings;

  // dimension 4
  bool six_valent = false;
  bool manifold = false;
  std::optional<ExactVolume> volume;
  std::optional<Rational> euler_characteristic;
  std::vector<BoundaryComponent> boundary_components;
  std::vector<Cusp> cusps;

  // dimension 3
  std::optional<TetrahedralCertificate> certificate;
  std::string signature;

  /// Closed, and hyperbolic by the combinatorial criteria: 6-valent with
  /// trivial returns (4D) or a granted tetrahedral certificate (3D).
  bool holds() const;
};

AnalysisReport analyze(const Triangulation4& t);
AnalysisReport analyze(const Triangulation3& t);

nlohmann::ordered_json to_json(const AnalysisReport& r);
nlohmann::ordered_json to_json(const SurfaceClass& s);
std::string to_text(const AnalysisReport& r);

}  // namespace hypertri
