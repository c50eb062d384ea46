#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hypertri/perm.hpp"
#include "hypertri/triangulation.hpp"

namespace hypertri {

/// A codimension-2 face of one simplex, named by the two labels it omits
/// (lo < hi). In dimension 4 this is a triangular 2-face, in dimension 3 an
/// edge. The face lies in exactly two facets: facet lo and facet hi.
struct RidgeSlot {
  std::size_t simplex = 0;
  int lo = 0;
  int hi = 1;

  friend bool operator==(const RidgeSlot&, const RidgeSlot&) = default;
  friend auto operator<=>(const RidgeSlot&, const RidgeSlot&) = default;
};

std::string to_string(const RidgeSlot& slot);

enum class ReturnClass { identity, transposition, three_cycle, other };

const char* to_string(ReturnClass c);

template <int N>
ReturnClass classify_return(const Perm<N>& p) {
  if (p.is_identity()) return ReturnClass::identity;
  const std::vector<int> type = p.cycle_type();
  const int moved = N - static_cast<int>(std::count(type.begin(), type.end(), 1));
  if (type.front() == 2 && moved == 2) return ReturnClass::transposition;
  if (type.front() == 3 && moved == 3) return ReturnClass::three_cycle;
  return ReturnClass::other;
}

/// Orbit of a codimension-2 face slot under "leave through one containing
/// facet, cross the gluing, leave through the other".
///
/// `slots` is in traversal order starting at the anchor. `return_map` is the
/// composite of the crossed gluings restricted to the face's Dim-1 vertex
/// labels, those labels compressed to 0..Dim-2 in increasing order.
template <int Dim>
struct RidgeCycle {
  std::vector<RidgeSlot> slots;
  Perm<Dim - 1> return_map;

  std::size_t length() const { return slots.size(); }
  ReturnClass return_class() const { return classify_return(return_map); }
};

using FaceCycle = RidgeCycle<4>;
using EdgeCycle3 = RidgeCycle<3>;

/// Walks the cycle through `start`, leaving first through facet `exit_facet`
/// (one of start.lo, start.hi). Throws NotClosedError if it meets an unglued
/// facet.
template <int Dim>
RidgeCycle<Dim> trace_ridge_cycle(const Triangulation<Dim>& t, RidgeSlot start, int exit_facet);

/// All cycles, each anchored at its lexicographically least slot and leaving
/// through that slot's lower omitted label; ordered by anchor.
template <int Dim>
std::vector<RidgeCycle<Dim>> ridge_cycles(const Triangulation<Dim>& t);

inline std::vector<FaceCycle> face_cycles(const Triangulation4& t) { return ridge_cycles(t); }
inline std::vector<EdgeCycle3> edge_cycles3(const Triangulation3& t) { return ridge_cycles(t); }

/// Every return map is the identity.
bool is_manifold(const Triangulation4& t);
/// Every face cycle has length 6.
bool is_six_valent(const Triangulation4& t);

template <int Dim>
std::map<std::size_t, std::size_t> length_histogram(const std::vector<RidgeCycle<Dim>>& cycles) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& c : cycles) ++h[c.length()];
  return h;
}

template <int Dim>
std::map<ReturnClass, std::size_t> return_histogram(const std::vector<RidgeCycle<Dim>>& cycles) {
  std::map<ReturnClass, std::size_t> h;
  for (const auto& c : cycles) ++h[c.return_class()];
  return h;
}

}  // namespace hypertri
