#include "hypertri/surface.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypertri/union_find.hpp"

namespace hypertri {

namespace {

// Endpoints of side i, increasing.
std::pair<int, int> side_corners(int side) {
  switch (side) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

// Under the corner order 0 -> 1 -> 2, the boundary runs through side i in
// increasing corner order except for side 1.
bool boundary_increasing(int side) { return side != 1; }

TriangulatedSurface restrict_surface(const TriangulatedSurface& s,
                                     const std::vector<std::size_t>& triangles) {
  std::vector<std::size_t> index(s.num_triangles(), SIZE_MAX);
  for (std::size_t i = 0; i < triangles.size(); ++i) index[triangles[i]] = i;
  std::vector<SideGluing> out;
  for (const auto& g : s.gluings())
    out.push_back({{index[g.a.triangle], g.a.side}, {index[g.b.triangle], g.b.side}, g.reversed});
  std::erase_if(out, [](const SideGluing& g) {
    return g.a.triangle == SIZE_MAX || g.b.triangle == SIZE_MAX;
  });
  return TriangulatedSurface(triangles.size(), out);
}

}  // namespace

TriangulatedSurface::TriangulatedSurface(std::size_t num_triangles,
                                         std::span<const SideGluing> gluings) {
  if (num_triangles == 0) throw std::invalid_argument("a surface needs at least one triangle");
  std::vector<std::array<std::optional<Partner>, 3>> tmp(num_triangles);
  const auto check = [&](const SideSlot& s) {
    if (s.triangle >= num_triangles || s.side < 0 || s.side > 2)
      throw std::invalid_argument("side slot out of range");
    if (tmp[s.triangle][s.side])
      throw std::invalid_argument("side (" + std::to_string(s.triangle) + "," +
                                  std::to_string(s.side) + ") glued twice");
  };
  for (const auto& g : gluings) {
    check(g.a);
    check(g.b);
    if (g.a == g.b) throw std::invalid_argument("side glued to itself");
    tmp[g.a.triangle][g.a.side] = Partner{g.b, g.reversed};
    tmp[g.b.triangle][g.b.side] = Partner{g.a, g.reversed};
  }
  partner_.resize(num_triangles);
  for (std::size_t t = 0; t < num_triangles; ++t) {
    for (int i = 0; i < 3; ++i) {
      if (!tmp[t][i])
        throw std::invalid_argument("side (" + std::to_string(t) + "," + std::to_string(i) +
                                    ") is not glued");
      partner_[t][i] = *tmp[t][i];
    }
  }
}

TriangulatedSurface TriangulatedSurface::from_triangulation(const Triangulation2& t) {
  t.require_closed();
  std::vector<SideGluing> out;
  for (const auto& g : t.gluings()) {
    const auto [lo, hi] = side_corners(g.from.facet);
    out.push_back({{g.from.simplex, g.from.facet}, {g.to.simplex, g.to.facet}, g.map[lo] > g.map[hi]});
  }
  return TriangulatedSurface(t.size(), out);
}

std::vector<SideGluing> TriangulatedSurface::gluings() const {
  std::vector<SideGluing> out;
  for (std::size_t t = 0; t < partner_.size(); ++t) {
    for (int i = 0; i < 3; ++i) {
      const SideSlot a{t, i};
      const Partner& p = partner_[t][i];
      if (a < p.slot) out.push_back({a, p.slot, p.reversed});
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> corner_classes(const TriangulatedSurface& s) {
  UnionFind uf(3 * s.num_triangles());
  for (const auto& g : s.gluings()) {
    const auto [a0, a1] = side_corners(g.a.side);
    auto [b0, b1] = side_corners(g.b.side);
    if (g.reversed) std::swap(b0, b1);
    uf.unite(3 * g.a.triangle + a0, 3 * g.b.triangle + b0);
    uf.unite(3 * g.a.triangle + a1, 3 * g.b.triangle + b1);
  }
  return uf.classes();
}

std::vector<std::size_t> vertex_valences(const TriangulatedSurface& s) {
  std::vector<std::size_t> out;
  for (const auto& c : corner_classes(s)) out.push_back(c.size());
  return out;
}

long euler_characteristic(const TriangulatedSurface& s) {
  const auto v = static_cast<long>(corner_classes(s).size());
  const auto f = static_cast<long>(s.num_triangles());
  return v - 3 * f / 2 + f;
}

bool is_orientable(const TriangulatedSurface& s) {
  // negative[t]: triangle t carries the orientation opposite to 0 -> 1 -> 2.
  std::vector<int> negative(s.num_triangles(), -1);
  for (std::size_t root = 0; root < s.num_triangles(); ++root) {
    if (negative[root] >= 0) continue;
    negative[root] = 0;
    std::vector<std::size_t> todo{root};
    while (!todo.empty()) {
      const std::size_t t = todo.back();
      todo.pop_back();
      for (int i = 0; i < 3; ++i) {
        const auto& p = s.partner({t, i});
        const int flip = 1 ^ boundary_increasing(i) ^ boundary_increasing(p.slot.side) ^ p.reversed;
        const int want = negative[t] ^ flip;
        int& other = negative[p.slot.triangle];
        if (other < 0) {
          other = want;
          todo.push_back(p.slot.triangle);
        } else if (other != want) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> components(const TriangulatedSurface& s) {
  UnionFind uf(s.num_triangles());
  for (const auto& g : s.gluings()) uf.unite(g.a.triangle, g.b.triangle);
  return uf.classes();
}

std::string SurfaceClass::name() const {
  switch (kind) {
    case SurfaceKind::sphere: return "sphere";
    case SurfaceKind::torus: return "torus";
    case SurfaceKind::klein_bottle: return "klein_bottle";
    case SurfaceKind::other: break;
  }
  return "other(chi=" + std::to_string(chi) + ",orientable=" + (orientable ? "true" : "false") + ")";
}

SurfaceClass classify(const TriangulatedSurface& s) {
  if (components(s).size() != 1) throw std::invalid_argument("surface is disconnected");
  SurfaceClass c;
  c.chi = euler_characteristic(s);
  c.orientable = is_orientable(s);
  c.triangles = s.num_triangles();
  if (c.chi == 2 && c.orientable) c.kind = SurfaceKind::sphere;
  else if (c.chi == 0 && c.orientable) c.kind = SurfaceKind::torus;
  else if (c.chi == 0) c.kind = SurfaceKind::klein_bottle;
  return c;
}

std::vector<SurfaceClass> classify_components(const TriangulatedSurface& s) {
  std::vector<SurfaceClass> out;
  for (const auto& comp : components(s)) out.push_back(classify(restrict_surface(s, comp)));
  return out;
}

}  // namespace hypertri
