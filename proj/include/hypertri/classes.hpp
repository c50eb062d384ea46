#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hypertri/triangulation.hpp"

namespace hypertri {

/// A face of one simplex given by the bitmask of its vertex labels.
struct FaceSlot {
  std::size_t simplex = 0;
  unsigned mask = 0;

  friend bool operator==(const FaceSlot&, const FaceSlot&) = default;
  friend auto operator<=>(const FaceSlot&, const FaceSlot&) = default;
};

struct VertexSlot {
  std::size_t simplex = 0;
  int vertex = 0;

  friend bool operator==(const VertexSlot&, const VertexSlot&) = default;
  friend auto operator<=>(const VertexSlot&, const VertexSlot&) = default;
};

struct EdgeSlot {
  std::size_t simplex = 0;
  int lo = 0;  // endpoint labels, lo < hi
  int hi = 1;

  friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
  friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

using VertexClass = std::vector<VertexSlot>;
using EdgeClass = std::vector<EdgeSlot>;

/// Identification classes of the k-dimensional face slots (k+1 labels) under
/// the existing gluings. Classes are ordered by least slot, slots ascending.
/// Partial triangulations are allowed.
template <int Dim>
std::vector<std::vector<FaceSlot>> face_classes(const Triangulation<Dim>& t, int face_dim);

template <int Dim>
std::vector<VertexClass> vertex_classes(const Triangulation<Dim>& t);

template <int Dim>
std::vector<EdgeClass> edge_classes(const Triangulation<Dim>& t);

/// Image of a label bitmask under a permutation.
template <int N>
unsigned map_mask(const Perm<N>& p, unsigned mask) {
  unsigned out = 0;
  for (int i = 0; i < N; ++i)
    if (mask & (1u << i)) out |= 1u << p[i];
  return out;
}

}  // namespace hypertri
