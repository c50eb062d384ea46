#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypertri/triangulation.hpp"

namespace hypertri {

/// Side i of a triangle is the side opposite corner i; its endpoints are the
/// other two corners, traversed in increasing order.
struct SideSlot {
  std::size_t triangle = 0;
  int side = 0;

  friend bool operator==(const SideSlot&, const SideSlot&) = default;
  friend auto operator<=>(const SideSlot&, const SideSlot&) = default;
};

/// `reversed` is set when the lower endpoint of `a` meets the higher
/// endpoint of `b`.
struct SideGluing {
  SideSlot a;
  SideSlot b;
  bool reversed = false;

  friend bool operator==(const SideGluing&, const SideGluing&) = default;
};

/// Closed surface built from triangles with every side glued exactly once.
class TriangulatedSurface {
 public:
  struct Partner {
    SideSlot slot;
    bool reversed;
    friend bool operator==(const Partner&, const Partner&) = default;
  };

  /// Throws std::invalid_argument unless every side slot is glued exactly
  /// once to a different side slot.
  TriangulatedSurface(std::size_t num_triangles, std::span<const SideGluing> gluings);

  /// Converts corner bijections into orientation bits. The input must be
  /// closed.
  static TriangulatedSurface from_triangulation(const Triangulation2& t);

  std::size_t num_triangles() const { return partner_.size(); }
  const Partner& partner(SideSlot s) const { return partner_[s.triangle][s.side]; }
  std::vector<SideGluing> gluings() const;

  friend bool operator==(const TriangulatedSurface&, const TriangulatedSurface&) = default;

 private:
  std::vector<std::array<Partner, 3>> partner_;
};

/// Corner identification classes; each class is a surface vertex and its
/// size is the vertex valence. Slots encoded as 3 * triangle + corner.
std::vector<std::vector<std::size_t>> corner_classes(const TriangulatedSurface& s);
std::vector<std::size_t> vertex_valences(const TriangulatedSurface& s);

/// V - E + F over the whole (possibly disconnected) surface.
long euler_characteristic(const TriangulatedSurface& s);
bool is_orientable(const TriangulatedSurface& s);
std::vector<std::vector<std::size_t>> components(const TriangulatedSurface& s);

enum class SurfaceKind { sphere, torus, klein_bottle, other };

struct SurfaceClass {
  SurfaceKind kind = SurfaceKind::other;
  long chi = 0;
  bool orientable = true;
  std::size_t triangles = 0;

  /// "sphere", "torus", "klein_bottle" or "other(chi=..,orientable=..)".
  std::string name() const;
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// Throws std::invalid_argument for a disconnected surface.
SurfaceClass classify(const TriangulatedSurface& s);
std::vector<SurfaceClass> classify_components(const TriangulatedSurface& s);

}  // namespace hypertri
