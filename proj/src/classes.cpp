#include "hypertri/classes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "hypertri/union_find.hpp"

namespace hypertri {

template <int Dim>
std::vector<std::vector<FaceSlot>> face_classes(const Triangulation<Dim>& t, int face_dim) {
  if (face_dim < 0 || face_dim > Dim) throw std::invalid_argument("face dimension out of range");

  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << (Dim + 1)); ++m)
    if (std::popcount(m) == face_dim + 1) masks.push_back(m);
  std::map<unsigned, std::size_t> mask_index;
  for (std::size_t i = 0; i < masks.size(); ++i) mask_index[masks[i]] = i;

  const auto id = [&](std::size_t s, unsigned m) { return s * masks.size() + mask_index.at(m); };
  UnionFind uf(t.size() * masks.size());
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (int f = 0; f <= Dim; ++f) {
      const auto& adj = t.adjacent(s, f);
      if (!adj) continue;
      for (unsigned m : masks)
        if (!(m & (1u << f))) uf.unite(id(s, m), id(adj->simplex, map_mask(adj->map, m)));
    }
  }

  std::vector<std::vector<FaceSlot>> out;
  for (const auto& cls : uf.classes()) {
    std::vector<FaceSlot> slots;
    slots.reserve(cls.size());
    for (std::size_t i : cls) slots.push_back({i / masks.size(), masks[i % masks.size()]});
    std::sort(slots.begin(), slots.end());
    out.push_back(std::move(slots));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

template <int Dim>
std::vector<VertexClass> vertex_classes(const Triangulation<Dim>& t) {
  std::vector<VertexClass> out;
  for (const auto& cls : face_classes(t, 0)) {
    VertexClass vc;
    for (const auto& f : cls) vc.push_back({f.simplex, std::countr_zero(f.mask)});
    std::sort(vc.begin(), vc.end());
    out.push_back(std::move(vc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

template <int Dim>
std::vector<EdgeClass> edge_classes(const Triangulation<Dim>& t) {
  std::vector<EdgeClass> out;
  for (const auto& cls : face_classes(t, 1)) {
    EdgeClass ec;
    for (const auto& f : cls) {
      const int lo = std::countr_zero(f.mask);
      const int hi = std::countr_zero(f.mask & ~(1u << lo));
      ec.push_back({f.simplex, lo, hi});
    }
    std::sort(ec.begin(), ec.end());
    out.push_back(std::move(ec));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

template std::vector<std::vector<FaceSlot>> face_classes<2>(const Triangulation<2>&, int);
template std::vector<std::vector<FaceSlot>> face_classes<3>(const Triangulation<3>&, int);
template std::vector<std::vector<FaceSlot>> face_classes<4>(const Triangulation<4>&, int);
template std::vector<VertexClass> vertex_classes<2>(const Triangulation<2>&);
template std::vector<VertexClass> vertex_classes<3>(const Triangulation<3>&);
template std::vector<VertexClass> vertex_classes<4>(const Triangulation<4>&);
template std::vector<EdgeClass> edge_classes<3>(const Triangulation<3>&);
template std::vector<EdgeClass> edge_classes<4>(const Triangulation<4>&);

}  // namespace hypertri
