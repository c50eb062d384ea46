#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypertri/classes.hpp"
#include "hypertri/cycles.hpp"
#include "hypertri/surface.hpp"
#include "hypertri/triangulation.hpp"

namespace hypertri {

/// Link of a class of face slots, one link simplex per slot in the given
/// order. A slot's surviving labels (those not in the face) are compressed
/// order-preservingly to 0..LinkDim; link facet i is crossed where the
/// ambient facet opposite the i-th surviving label is. Ambient facets that
/// are unglued stay unglued. Throws std::invalid_argument when the slots are
/// not closed under the gluings or the face size does not match LinkDim.
template <int Dim, int LinkDim>
Triangulation<LinkDim> face_link(const Triangulation<Dim>& t, std::span<const FaceSlot> slots);

/// Boundary 3-manifold at a vertex class. `cls` must be one of
/// vertex_classes(t).
Triangulation3 vertex_link(const Triangulation4& t, const VertexClass& cls);

/// Triangulated cross-section of the cusp at a vertex class of t3.
TriangulatedSurface cusp_link_surface(const Triangulation3& t3, const VertexClass& cls);

/// Flat surface under the cusp at an edge class of t; one triangle per slot.
TriangulatedSurface cusp_surface4(const Triangulation4& t, const EdgeClass& cls);

struct TetrahedralCertificate {
  bool all_valence_six = false;
  bool all_returns_trivial = false;
  bool orientable = false;
  std::size_t num_tetrahedra = 0;
  std::size_t num_edges = 0;
  std::size_t num_cusps = 0;
  std::vector<SurfaceClass> cusp_surfaces;
  double volume = 0.0;

  bool granted() const { return all_valence_six && all_returns_trivial; }
};

/// Requires t3 closed.
TetrahedralCertificate tetrahedral_certificate(const Triangulation3& t3);

}  // namespace hypertri
