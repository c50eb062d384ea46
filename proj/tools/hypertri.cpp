// Command-line front end: validation, analysis, vertex links, isomorphism,
// signatures and the built-in constructions.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 parse or
// structural error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"

#include "hypertri/classes.hpp"
#include "hypertri/constructions.hpp"
#include "hypertri/format.hpp"
#include "hypertri/iso.hpp"
#include "hypertri/link.hpp"
#include "hypertri/report.hpp"

namespace {

using namespace hypertri;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

int cmd_validate(const std::string& path) {
  const auto any = read_file(path);
  return std::visit(
      [](const auto& t) {
        const auto r = validate(t);
        std::cout << "simplices: " << r.num_simplices << "\n"
                  << "gluings: " << r.num_gluings << "\n";
        if (r.closed) {
          std::cout << "closed\n";
          return kHolds;
        }
        std::cout << "not closed: " << r.unpaired.size() << " unpaired facet slot(s):";
        for (const auto& u : r.unpaired) std::cout << ' ' << to_string(u);
        std::cout << "\n";
        return kFails;
      },
      any);
}

int cmd_analyze(const std::string& path, bool json) {
  const auto any = read_file(path);
  const AnalysisReport r = std::visit([](const auto& t) { return analyze(t); }, any);
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return r.holds() ? kHolds : kFails;
}

int cmd_links(const std::string& path, const std::string& out_dir) {
  const auto any = read_file(path);
  const auto* t = std::get_if<Triangulation4>(&any);
  if (t == nullptr) {
    std::cerr << "error: links needs a tri4 file\n";
    return kError;
  }
  if (!t->closed()) {
    std::cerr << "error: " << NotClosedError(t->unpaired()).what() << "\n";
    return kFails;
  }
  std::filesystem::create_directories(out_dir);
  const auto classes = vertex_classes(*t);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Triangulation3 link = vertex_link(*t, classes[i]);
    const std::string name = "link_" + std::to_string(i) + "_" + short_hash(signature(link)) + ".tri3";
    const auto file = std::filesystem::path(out_dir) / name;
    std::ofstream out(file);
    if (!out) {
      std::cerr << "error: cannot write " << file.string() << "\n";
      return kError;
    }
    write_tri(out, link);
    std::cout << file.string() << " " << link.size() << "\n";
  }
  return kHolds;
}

template <int Dim>
void print_iso(const Isomorphism<Dim>& iso) {
  std::cout << "isomorphic (orientation " << to_string(iso.orientation_effect) << ")\n";
  for (std::size_t s = 0; s < iso.simplex_map.size(); ++s)
    std::cout << "  " << s << " -> " << iso.simplex_map[s] << " labels " << iso.label_maps[s].str()
              << "\n";
}

int cmd_iso(const std::string& path_a, const std::string& path_b) {
  const auto a = read_file(path_a);
  const auto b = read_file(path_b);
  if (a.index() != b.index()) {
    std::cerr << "error: dimension mismatch\n";
    return kError;
  }
  const auto run = [](const auto& x, const auto& y) {
    const auto iso = isomorphic(x, y);
    if (!iso) {
      std::cout << "not isomorphic\n";
      return kFails;
    }
    print_iso(*iso);
    return kHolds;
  };
  if (a.index() == 0) return run(std::get<0>(a), std::get<0>(b));
  return run(std::get<1>(a), std::get<1>(b));
}

int cmd_sig(const std::string& path) {
  const auto any = read_file(path);
  std::cout << std::visit([](const auto& t) { return signature(t); }, any) << "\n";
  return kHolds;
}

int cmd_sym(const std::string& path) {
  const auto any = read_file(path);
  return std::visit(
      [](const auto& t) {
        if (!is_connected(t)) {
          std::cerr << "error: symmetries need a connected triangulation\n";
          return kError;
        }
        const auto syms = symmetries(t);
        std::size_t reversing = 0;
        for (const auto& s : syms)
          if (s.orientation_effect == OrientationEffect::reverses) ++reversing;
        std::cout << "symmetries: " << syms.size() << "\n";
        if (is_orientable(t)) std::cout << "orientation-reversing: " << reversing << "\n";
        for (const auto& s : syms)
          std::cout << "  fixed simplices " << s.fixed_simplices() << ", orientation "
                    << to_string(s.orientation_effect) << "\n";
        return kHolds;
      },
      any);
}

int cmd_builtin(const std::string& name, std::size_t k, const std::string& out_path) {
  std::string text;
  if (name == "fig8") text = to_text(build_fig8());
  else if (name == "coneC") text = to_text(build_cone_c());
  else if (name == "tripleT") text = to_text(build_triple_t(k));
  else if (name == "k6block") text = to_text(build_k6());
  else {
    std::cerr << "error: unknown builtin '" << name << "' (fig8, coneC, tripleT, k6block)\n";
    return kError;
  }
  if (out_path.empty()) {
    std::cout << text;
    return kHolds;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kError;
  }
  out << text;
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facet-pairing triangulations of hyperbolic 4-manifolds"};
  app.require_subcommand(1);

  std::string path, path_b, out_dir = ".", out_path, name;
  bool json = false;
  std::size_t k = 3;

  auto* validate_cmd = app.add_subcommand("validate", "Check structure and closedness");
  validate_cmd->add_option("file", path, "tri3/tri4 file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
  analyze_cmd->add_option("file", path, "tri3/tri4 file")->required();
  analyze_cmd->add_flag("--json", json, "Emit the JSON report");

  auto* links_cmd = app.add_subcommand("links", "Write one tri3 file per vertex link");
  links_cmd->add_option("file", path, "tri4 file")->required();
  links_cmd->add_option("--out-dir", out_dir, "Output directory");

  auto* iso_cmd = app.add_subcommand("iso", "Test two triangulations for isomorphism");
  iso_cmd->add_option("a", path, "first file")->required();
  iso_cmd->add_option("b", path_b, "second file")->required();

  auto* sig_cmd = app.add_subcommand("sig", "Print the canonical signature");
  sig_cmd->add_option("file", path, "tri3/tri4 file")->required();

  auto* sym_cmd = app.add_subcommand("sym", "Enumerate combinatorial symmetries");
  sym_cmd->add_option("file", path, "tri3/tri4 file")->required();

  auto* builtin_cmd = app.add_subcommand("builtin", "Emit a built-in construction");
  builtin_cmd->add_option("name", name, "fig8, coneC, tripleT or k6block")->required();
  builtin_cmd->add_option("--out", out_path, "Output file (default stdout)");
  builtin_cmd->add_option("--copies", k, "Number of cone copies for tripleT")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*analyze_cmd) return cmd_analyze(path, json);
    if (*links_cmd) return cmd_links(path, out_dir);
    if (*iso_cmd) return cmd_iso(path, path_b);
    if (*sig_cmd) return cmd_sig(path);
    if (*sym_cmd) return cmd_sym(path);
    if (*builtin_cmd) return cmd_builtin(name, k, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
