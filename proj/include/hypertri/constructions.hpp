#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "hypertri/triangulation.hpp"

namespace hypertri {

// All builders use 0-based labels: label k here is vertex k+1 in the usual
// 1..5 (or 1..4) hand notation, so the cone apex "5" is label 4.

/// Two-tetrahedron ideal triangulation of the figure-eight knot complement.
/// Tetrahedron 0 is A, 1 is B. Hand-notation table (A <-> B):
///   (1,2,4) <-> (1,4,2)
///   (1,2,3) <-> (3,2,1)
///   (1,4,3) <-> (3,2,4)
///   (2,3,4) <-> (4,1,3)
Triangulation3 build_fig8();

/// Cone over build_fig8() with apex label 4; the two facets opposite the
/// apex (slots (0,4) and (1,4)) are left unglued.
Triangulation4 build_cone_c();

/// k copies of the cone in a ring. Copy c occupies simplices 2c (A) and
/// 2c+1 (B); facet 4 of copy c's A is glued to facet 4 of copy (c+1 mod k)'s
/// B by the transposition of labels 0 and 1. Throws for k == 0.
Triangulation4 build_triple_t(std::size_t k = 3);

/// Proper 5-edge-colouring of K6: colour c is the perfect matching
/// coloring[c].
using K6Coloring = std::array<std::array<std::pair<int, int>, 3>, 5>;

/// Pinned colouring: colour c pairs {c, 5}, {c+1, c-1}, {c+2, c-2} (mod 5).
K6Coloring k6_default_coloring();

/// Six simplices, one per K6 vertex; each edge of colour i glues facet i of
/// its endpoints by the identity. Throws std::invalid_argument if the
/// colouring is not proper.
Triangulation4 build_k6(const K6Coloring& coloring = k6_default_coloring());

}  // namespace hypertri
