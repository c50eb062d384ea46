#include "hypertri/link.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "hypertri/volume.hpp"

namespace hypertri {

template <int Dim, int LinkDim>
Triangulation<LinkDim> face_link(const Triangulation<Dim>& t, std::span<const FaceSlot> slots) {
  static_assert(LinkDim >= 1 && LinkDim < Dim);
  constexpr int face_size = Dim - LinkDim;
  if (slots.empty()) throw std::invalid_argument("empty face class");

  std::map<FaceSlot, std::size_t> index;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].simplex >= t.size() || std::popcount(slots[i].mask) != face_size)
      throw std::invalid_argument("face slot does not fit the link dimension");
    index.emplace(slots[i], i);
  }

  // Surviving labels of a face, ascending, and the inverse lookup.
  const auto survivors = [](unsigned mask) {
    std::array<int, LinkDim + 1> out{};
    for (int v = 0, k = 0; v <= Dim; ++v)
      if (!(mask & (1u << v))) out[k++] = v;
    return out;
  };
  const auto position = [](const std::array<int, LinkDim + 1>& labels, int v) {
    return static_cast<int>(std::find(labels.begin(), labels.end(), v) - labels.begin());
  };

  std::vector<Gluing<LinkDim>> gluings;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto here = survivors(slots[i].mask);
    for (int k = 0; k <= LinkDim; ++k) {
      const int f = here[k];
      const auto& adj = t.adjacent(slots[i].simplex, f);
      if (!adj) continue;
      const FaceSlot image{adj->simplex, map_mask(adj->map, slots[i].mask)};
      const auto it = index.find(image);
      if (it == index.end()) throw std::invalid_argument("face slots are not a full class");
      const auto there = survivors(image.mask);
      std::array<int, LinkDim + 1> images{};
      for (int j = 0; j <= LinkDim; ++j) images[j] = position(there, adj->map[here[j]]);
      const FacetSlot from{i, k};
      const FacetSlot to{it->second, position(there, adj->facet)};
      if (from < to) gluings.push_back({from, to, Perm<LinkDim + 1>::from_images(images)});
    }
  }
  return Triangulation<LinkDim>(slots.size(), gluings);
}

namespace {

template <int Dim, typename Slot, typename MaskOf>
std::vector<FaceSlot> as_face_slots(const Triangulation<Dim>& t, const std::vector<Slot>& cls,
                                    int face_dim, MaskOf mask_of) {
  std::vector<FaceSlot> slots;
  for (const auto& s : cls) slots.push_back({s.simplex, mask_of(s)});
  std::vector<FaceSlot> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  const auto all = face_classes(t, face_dim);
  if (std::find(all.begin(), all.end(), sorted) == all.end())
    throw std::invalid_argument("not one of the triangulation's face classes");
  return slots;
}

unsigned vertex_mask(const VertexSlot& v) { return 1u << v.vertex; }
unsigned edge_mask(const EdgeSlot& e) { return (1u << e.lo) | (1u << e.hi); }

}  // namespace

Triangulation3 vertex_link(const Triangulation4& t, const VertexClass& cls) {
  t.require_closed();
  const auto slots = as_face_slots(t, cls, 0, vertex_mask);
  return face_link<4, 3>(t, slots);
}

TriangulatedSurface cusp_link_surface(const Triangulation3& t3, const VertexClass& cls) {
  t3.require_closed();
  const auto slots = as_face_slots(t3, cls, 0, vertex_mask);
  return TriangulatedSurface::from_triangulation(face_link<3, 2>(t3, slots));
}

TriangulatedSurface cusp_surface4(const Triangulation4& t, const EdgeClass& cls) {
  t.require_closed();
  const auto slots = as_face_slots(t, cls, 1, edge_mask);
  return TriangulatedSurface::from_triangulation(face_link<4, 2>(t, slots));
}

TetrahedralCertificate tetrahedral_certificate(const Triangulation3& t3) {
  TetrahedralCertificate c;
  const auto cycles = edge_cycles3(t3);
  c.num_tetrahedra = t3.size();
  c.num_edges = cycles.size();
  c.all_valence_six = std::all_of(cycles.begin(), cycles.end(),
                                  [](const EdgeCycle3& e) { return e.length() == 6; });
  c.all_returns_trivial = std::all_of(cycles.begin(), cycles.end(),
                                      [](const EdgeCycle3& e) { return e.return_map.is_identity(); });
  c.orientable = is_orientable(t3);
  const auto cusps = vertex_classes(t3);
  c.num_cusps = cusps.size();
  for (const auto& v : cusps) c.cusp_surfaces.push_back(classify(cusp_link_surface(t3, v)));
  c.volume = volume3(t3);
  return c;
}

template Triangulation<3> face_link<4, 3>(const Triangulation<4>&, std::span<const FaceSlot>);
template Triangulation<2> face_link<4, 2>(const Triangulation<4>&, std::span<const FaceSlot>);
template Triangulation<2> face_link<3, 2>(const Triangulation<3>&, std::span<const FaceSlot>);

}  // namespace hypertri
