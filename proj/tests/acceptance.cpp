// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "hypertri/classes.hpp"
#include "hypertri/constructions.hpp"
#include "hypertri/cycles.hpp"
#include "hypertri/format.hpp"
#include "hypertri/link.hpp"
#include "hypertri/volume.hpp"

using namespace hypertri;

namespace {

// Collects failed checks of one criterion.
class Criterion {
 public:
  explicit Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool report() const {
    const bool ok = failures_.empty();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number_ << ": " << title_;
    for (const auto& n : notes_) std::cout << " [" << n << "]";
    std::cout << "\n";
    for (const auto& f : failures_) std::cout << "     failed: " << f << "\n";
    return ok;
  }

 private:
  int number_;
  std::string title_;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <typename Classes>
std::multiset<std::size_t> sizes_of(const Classes& classes) {
  std::multiset<std::size_t> out;
  for (const auto& c : classes) out.insert(c.size());
  return out;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(HYPERTRI_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  out += "\nexit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
  return out;
}

bool criterion1() {
  Criterion c(1, "figure-eight fixture");
  const auto t = build_fig8();
  c.check(t.size() == 2, "2 tetrahedra");
  c.check(vertex_classes(t).size() == 1, "1 vertex class");
  const auto cycles = edge_cycles3(t);
  c.check(cycles.size() == 2, "2 edge classes");
  for (const auto& e : cycles) {
    c.check(e.length() == 6, "edge valence 6");
    c.check(e.return_map.is_identity(), "trivial edge return");
  }
  c.check(is_orientable(t), "orientable");
  const std::string vol = volume3_decimal(t);
  c.note("volume " + vol);
  c.check(vol == "2.0298832128193072", "volume prints 2.0298832128193072");
  c.check(vol.rfind("2.029883", 0) == 0, "volume agrees with 2.029883");
  const auto s = cusp_link_surface(t, vertex_classes(t)[0]);
  const auto cls = classify(s);
  c.check(cls.kind == SurfaceKind::torus && cls.triangles == 8, "cusp torus with 8 triangles");
  return c.report();
}

bool same_up_to_rotation_and_reversal(std::vector<RidgeSlot> a, const std::vector<RidgeSlot>& b) {
  if (a.size() != b.size()) return false;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a == b) return true;
      std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

bool criterion2() {
  Criterion c(2, "triple-cycle construction");
  const auto t = build_triple_t(3);
  c.check(t.closed(), "closed");
  c.check(t.size() == 6, "6 simplices");
  c.check(t.num_gluings() == 15, "15 gluings");
  const auto cycles = face_cycles(t);
  c.check(cycles.size() == 10, "10 face cycles");
  for (const auto& f : cycles) {
    c.check(f.length() == 6, "cycle length 6");
    c.check(f.return_map.is_identity(), "identity return");
  }
  // Reference cycles avoiding the apex, as (simplex, omitted pair); copy c
  // is simplices 2c (A) and 2c+1 (B).
  const std::vector<std::vector<RidgeSlot>> reference{
      {{0, 3, 4}, {3, 3, 4}, {2, 3, 4}, {5, 3, 4}, {4, 3, 4}, {1, 3, 4}},
      {{0, 2, 4}, {3, 2, 4}, {2, 2, 4}, {5, 2, 4}, {4, 2, 4}, {1, 2, 4}},
      {{0, 1, 4}, {3, 0, 4}, {2, 1, 4}, {5, 0, 4}, {4, 1, 4}, {1, 0, 4}},
      {{0, 0, 4}, {3, 1, 4}, {2, 0, 4}, {5, 1, 4}, {4, 0, 4}, {1, 1, 4}},
  };
  std::size_t matched = 0;
  for (const auto& ref : reference)
    for (const auto& f : cycles)
      if (same_up_to_rotation_and_reversal(f.slots, ref)) ++matched;
  c.note(std::to_string(matched) + "/4 reference cycles matched");
  c.check(matched == 4, "four reference cycles");
  c.check(is_orientable(t), "orientable");
  c.check(exact_volume(t).pi2_coefficient == Rational(4, 3), "volume 4/3 pi^2");
  c.check(euler_characteristic(t) == Rational(1), "chi = 1");
  return c.report();
}

bool criterion3() {
  Criterion c(3, "boundary decomposition of the triple-cycle construction");
  const auto t = build_triple_t(3);
  const auto classes = vertex_classes(t);
  c.check(sizes_of(classes) == std::multiset<std::size_t>{2, 2, 2, 24}, "class sizes {2,2,2,24}");
  const auto fig8 = build_fig8();
  const std::string fig8_sig = signature(fig8);
  for (const auto& cls : classes) {
    const auto link = vertex_link(t, cls);
    if (cls.size() == 2) {
      c.check(isomorphic(link, fig8).has_value(), "size-2 link isomorphic to figure-eight");
      c.check(signature(link) == fig8_sig, "size-2 link signature equals figure-eight");
    } else {
      const auto cert = tetrahedral_certificate(link);
      c.note("24-tetrahedron link: " + std::to_string(cert.num_edges) + " edges, " +
             std::to_string(cert.num_cusps) + " cusps");
      c.check(cert.all_valence_six, "all edge valences 6");
      c.check(cert.all_returns_trivial, "trivial returns");
      c.check(cert.granted(), "certificate granted");
      for (const auto& s : cert.cusp_surfaces) c.check(s.chi == 0, "cusp surface chi = 0");
    }
  }
  return c.report();
}

bool criterion4() {
  Criterion c(4, "K6 block");
  const auto t = build_k6();
  c.check(is_six_valent(t), "6-valent");
  c.check(is_manifold(t), "trivial returns");
  c.check(!is_orientable(t), "non-orientable");
  const auto vc = vertex_classes(t);
  c.check(sizes_of(vc) == fixtures::repeated(5, 6), "5 vertex classes of size 6");
  const auto ec = edge_classes(t);
  c.check(sizes_of(ec) == fixtures::repeated(10, 6), "10 edge classes of size 6");
  for (const auto& e : ec) {
    const auto s = classify(cusp_surface4(t, e));
    c.check(s.kind == SurfaceKind::klein_bottle && s.triangles == 6, "Klein bottle with 6 triangles");
  }
  // Partition of the five boundary links by signature.
  std::map<std::string, std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i < vc.size(); ++i) parts[signature(vertex_link(t, vc[i]))].push_back(i);
  std::ostringstream os;
  os << "link signature partition:";
  for (const auto& [sig, members] : parts) {
    os << " {";
    for (std::size_t k = 0; k < members.size(); ++k) os << (k ? "," : "") << members[k];
    os << "}=" << short_hash(sig);
  }
  c.note(os.str());
  c.check(parts.size() == 1, "all five link signatures agree");
  for (std::size_t i = 1; i < vc.size(); ++i)
    c.check(isomorphic(vertex_link(t, vc[0]), vertex_link(t, vc[i])).has_value(),
            "links pairwise isomorphic");
  return c.report();
}

bool criterion5() {
  Criterion c(5, "negative controls");
  for (std::size_t k : {1u, 2u}) {
    const auto t = build_triple_t(k);
    c.check(!is_six_valent(t), "tripleT(" + std::to_string(k) + ") not 6-valent");
    std::set<std::size_t> off;
    for (const auto& f : face_cycles(t))
      if (f.slots.front().hi == 4) off.insert(f.length());
    std::ostringstream os;
    for (auto l : off) os << l << ' ';
    c.note("k=" + std::to_string(k) + " off-label lengths " + os.str().substr(0, os.str().size() - 1));
    c.check(off == std::set<std::size_t>{2 * k}, "off-label length " + std::to_string(2 * k));
  }
  const auto d = fixtures::identity_double<4>();
  const auto cycles = face_cycles(d);
  c.check(cycles.size() == 10, "identity double: 10 cycles");
  for (const auto& f : cycles) c.check(f.length() == 2, "identity double: length 2");
  const auto s = cusp_surface4(d, edge_classes(d)[0]);
  const auto val = vertex_valences(s);
  c.check(std::find(val.begin(), val.end(), 2u) != val.end(), "valence-2 cusp vertex");
  c.check(euler_characteristic(s) > 0, "cusp chi > 0");
  return c.report();
}

bool criterion6() {
  Criterion c(6, "Euler arithmetic");
  const std::vector<std::pair<std::string, Triangulation4>> closed{
      {"tripleT", build_triple_t(3)}, {"tripleT(1)", build_triple_t(1)},
      {"tripleT(2)", build_triple_t(2)}, {"k6block", build_k6()},
      {"identity double", fixtures::identity_double<4>()}};
  for (const auto& [name, t] : closed) {
    const Rational chi = euler_characteristic(t);
    c.check(chi == Rational(static_cast<std::int64_t>(t.size()), 6), name + ": chi = N/6");
    c.check(chi.is_integer() == (t.size() == 6), name + ": integral exactly when N = 6");
  }
  const Rational four = euler_characteristic_for(4);
  c.note("N=4 gives " + four.str());
  c.check(four == Rational(2, 3) && !four.is_integer(), "N = 4 flagged non-integer");
  return c.report();
}

bool criterion7() {
  Criterion c(7, "property suites");
  std::mt19937 rng(20241016);
  const std::vector<Triangulation4> builders{build_cone_c(), build_triple_t(3), build_k6()};

  // (a) involution and partition invariants.
  for (const auto& base : builders) {
    const auto v0 = sizes_of(vertex_classes(base));
    const auto e0 = sizes_of(edge_classes(base));
    for (int trial = 0; trial < 200; ++trial) {
      const auto t = apply(fixtures::random_relabel<4>(base.size(), rng), base);
      bool involutive = true;
      for (std::size_t s = 0; s < t.size(); ++s)
        for (int f = 0; f < 5; ++f)
          if (const auto a = t.adjacent(s, f)) {
            const auto b = t.adjacent(a->simplex, a->facet);
            involutive &= b && b->simplex == s && b->facet == f && (b->map * a->map).is_identity();
          }
      c.check(involutive, "(a) involution");
      c.check(sizes_of(vertex_classes(t)) == v0 && sizes_of(edge_classes(t)) == e0, "(a) class partition");
      if (t.closed()) {
        std::size_t total = 0;
        std::set<RidgeSlot> seen;
        for (const auto& f : face_cycles(t)) {
          total += f.length();
          seen.insert(f.slots.begin(), f.slots.end());
        }
        c.check(total == 10 * t.size() && seen.size() == total, "(a) face-slot partition");
      }
    }
  }
  const auto fig8 = build_fig8();
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = apply(fixtures::random_relabel<3>(fig8.size(), rng), fig8);
    c.check(sizes_of(edge_classes(t)) == std::multiset<std::size_t>{6, 6}, "(a) fig8 edge classes");
  }

  // (b) signature equality iff isomorphism.
  std::vector<Triangulation3> pool{fig8, fixtures::identity_double<3>()};
  const auto tt = build_triple_t(3);
  for (const auto& cls : vertex_classes(tt)) pool.push_back(vertex_link(tt, cls));
  const auto k6 = build_k6();
  pool.push_back(vertex_link(k6, vertex_classes(k6)[0]));
  const std::size_t base = pool.size();
  for (std::size_t i = 0; i < base; ++i)
    pool.push_back(apply(fixtures::random_relabel<3>(pool[i].size(), rng), pool[i]));
  std::size_t pairs = 0;
  for (const auto& a : pool)
    for (const auto& b : pool) {
      ++pairs;
      c.check(isomorphic(a, b).has_value() == (signature(a) == signature(b)), "(b) signature iff isomorphic");
    }
  c.note(std::to_string(pairs) + " pairs");

  // (c) return class independent of start and direction.
  const std::vector<Triangulation4> closed{build_triple_t(1), build_triple_t(2), build_triple_t(3), build_k6(),
                                           fixtures::identity_double<4>()};
  for (const auto& t : closed)
    for (const auto& f : face_cycles(t))
      for (const auto& s : f.slots)
        for (int exit : {s.lo, s.hi})
          c.check(trace_ridge_cycle(t, s, exit).return_class() == f.return_class(), "(c) return class");

  // (d) orientable fixture => orientable vertex links.
  for (const auto& t : closed)
    if (is_orientable(t))
      for (const auto& cls : vertex_classes(t)) c.check(is_orientable(vertex_link(t, cls)), "(d) link orientable");
  return c.report();
}

bool criterion8() {
  Criterion c(8, "determinism");
  for (const char* name : {"fig8", "coneC", "tripleT", "k6block"}) {
    const std::string file = std::string("acceptance_") + name + ".tri";
    const std::string a = capture(std::string("builtin ") + name + " --out " + file);
    const std::string first = capture("analyze --json " + file);
    const std::string second = capture("analyze --json " + file);
    c.check(a.find("exit 0") != std::string::npos, std::string(name) + ": builtin written");
    c.check(first.find("\"report_version\": 1") != std::string::npos, std::string(name) + ": JSON report");
    c.check(first == second, std::string(name) + ": byte-identical analyze --json");
    std::remove(file.c_str());
  }
  const auto t = build_triple_t(3);
  std::string sig_first, sig_second;
  for (const auto& cls : vertex_classes(t))
    if (cls.size() == 24) sig_first = signature(vertex_link(t, cls));
  for (const auto& cls : vertex_classes(build_triple_t(3)))
    if (cls.size() == 24) sig_second = signature(vertex_link(build_triple_t(3), cls));
  c.check(!sig_first.empty() && sig_first == sig_second, "24-tetrahedron signature stable");
  c.note("24-tetrahedron signature hash " + short_hash(sig_first));
  return c.report();
}

}  // namespace

int main() {
  bool ok = true;
  for (auto* criterion : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7,
                          criterion8}) {
    try {
      ok &= criterion();
    } catch (const std::exception& e) {
      std::cout << "FAIL (exception: " << e.what() << ")\n";
      ok = false;
    }
  }
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return ok ? 0 : 1;
}
