#include "hypertri/constructions.hpp"

#include <stdexcept>
#include <vector>

namespace hypertri {

namespace {

// Face pairing given as matched vertex tuples in 1-based hand notation: the
// i-th entry of `a` goes to the i-th entry of `b`, the omitted label goes to
// the omitted label.
template <int N>
Perm<N> pairing_from_tuples(const std::array<int, N - 1>& a, const std::array<int, N - 1>& b) {
  std::array<int, N> images{};
  images.fill(-1);
  unsigned in_a = 0;
  unsigned in_b = 0;
  for (int i = 0; i < N - 1; ++i) {
    images[a[i] - 1] = b[i] - 1;
    in_a |= 1u << (a[i] - 1);
    in_b |= 1u << (b[i] - 1);
  }
  int missing_a = 0;
  int missing_b = 0;
  while (in_a & (1u << missing_a)) ++missing_a;
  while (in_b & (1u << missing_b)) ++missing_b;
  images[missing_a] = missing_b;
  return Perm<N>::from_images(images);
}

template <int N>
int omitted(const std::array<int, N - 1>& tuple) {
  unsigned seen = 0;
  for (int v : tuple) seen |= 1u << (v - 1);
  int m = 0;
  while (seen & (1u << m)) ++m;
  return m;
}

struct Fig8Row {
  std::array<int, 3> a;
  std::array<int, 3> b;
};

constexpr std::array<Fig8Row, 4> kFig8Table{{
    {{1, 2, 4}, {1, 4, 2}},
    {{1, 2, 3}, {3, 2, 1}},
    {{1, 4, 3}, {3, 2, 4}},
    {{2, 3, 4}, {4, 1, 3}},
}};

// Cone gluings between simplices a and b (apex "5" prepended to each row).
void add_cone_gluings(std::size_t a, std::size_t b, std::vector<Gluing<4>>& out) {
  for (const auto& row : kFig8Table) {
    const std::array<int, 4> ta{5, row.a[0], row.a[1], row.a[2]};
    const std::array<int, 4> tb{5, row.b[0], row.b[1], row.b[2]};
    out.push_back({{a, omitted<5>(ta)}, {b, omitted<5>(tb)}, pairing_from_tuples<5>(ta, tb)});
  }
}

}  // namespace

Triangulation3 build_fig8() {
  std::vector<Gluing<3>> g;
  for (const auto& row : kFig8Table)
    g.push_back({{0, omitted<4>(row.a)}, {1, omitted<4>(row.b)}, pairing_from_tuples<4>(row.a, row.b)});
  return Triangulation3(2, g);
}

Triangulation4 build_cone_c() {
  std::vector<Gluing<4>> g;
  add_cone_gluings(0, 1, g);
  return Triangulation4(2, g);
}

Triangulation4 build_triple_t(std::size_t k) {
  if (k == 0) throw std::invalid_argument("build_triple_t needs at least one copy");
  std::vector<Gluing<4>> g;
  for (std::size_t c = 0; c < k; ++c) add_cone_gluings(2 * c, 2 * c + 1, g);
  // A:(1234) -> B:(2134)
  const Perm5 swap01 = pairing_from_tuples<5>({1, 2, 3, 4}, {2, 1, 3, 4});
  for (std::size_t c = 0; c < k; ++c) g.push_back({{2 * c, 4}, {2 * ((c + 1) % k) + 1, 4}, swap01});
  return Triangulation4(2 * k, g);
}

K6Coloring k6_default_coloring() {
  K6Coloring col{};
  for (int c = 0; c < 5; ++c) {
    col[c][0] = {c, 5};
    col[c][1] = {(c + 1) % 5, (c + 4) % 5};
    col[c][2] = {(c + 2) % 5, (c + 3) % 5};
  }
  return col;
}

Triangulation4 build_k6(const K6Coloring& coloring) {
  std::array<std::array<bool, 6>, 6> edge_seen{};
  std::vector<Gluing<4>> g;
  for (int c = 0; c < 5; ++c) {
    unsigned covered = 0;
    for (const auto& [u, v] : coloring[c]) {
      if (u < 0 || u > 5 || v < 0 || v > 5 || u == v || edge_seen[u][v])
        throw std::invalid_argument("not a proper 5-edge-colouring of K6");
      edge_seen[u][v] = edge_seen[v][u] = true;
      covered |= (1u << u) | (1u << v);
      g.push_back({{static_cast<std::size_t>(u), c}, {static_cast<std::size_t>(v), c}, Perm5{}});
    }
    if (covered != 0x3f) throw std::invalid_argument("colour class is not a perfect matching");
  }
  return Triangulation4(6, g);
}

}  // namespace hypertri
