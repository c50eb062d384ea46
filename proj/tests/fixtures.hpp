#pragma once

// Test-only fixtures and brute-force oracles. The oracles work from the raw
// gluing list and never call the library's traversal or union-find code.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hypertri/iso.hpp"
#include "hypertri/triangulation.hpp"

namespace fixtures {

using namespace hypertri;

/// Multiset holding `count` copies of `value`.
inline std::multiset<std::size_t> repeated(std::size_t count, std::size_t value) {
  std::multiset<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.insert(value);
  return out;
}

/// Two simplices glued along every facet by the identity.
template <int Dim>
Triangulation<Dim> identity_double() {
  std::vector<Gluing<Dim>> g;
  for (int f = 0; f <= Dim; ++f) g.push_back({{0, f}, {1, f}, Perm<Dim + 1>{}});
  return Triangulation<Dim>(2, g);
}

/// Random relabelling of simplices and of each simplex's vertex labels.
template <int Dim>
Isomorphism<Dim> random_relabel(std::size_t n, std::mt19937& rng) {
  Isomorphism<Dim> iso;
  iso.simplex_map.resize(n);
  for (std::size_t i = 0; i < n; ++i) iso.simplex_map[i] = i;
  std::shuffle(iso.simplex_map.begin(), iso.simplex_map.end(), rng);
  std::uniform_int_distribution<int> pick(0, Perm<Dim + 1>::count - 1);
  for (std::size_t i = 0; i < n; ++i) iso.label_maps.push_back(Perm<Dim + 1>::from_lex_index(pick(rng)));
  return iso;
}

/// All directed gluings (both directions) keyed by source slot.
template <int Dim>
std::map<FacetSlot, Gluing<Dim>> directed(const Triangulation<Dim>& t) {
  std::map<FacetSlot, Gluing<Dim>> out;
  for (const auto& g : t.gluings()) {
    out.emplace(g.from, g);
    out.emplace(g.to, g.inverse());
  }
  return out;
}

/// Sizes of the connected components of the graph whose vertices are the
/// codimension-2 face slots (simplex, omitted pair) and whose edges come from
/// the gluings of facets containing them (the facets named by the omitted
/// pair), found by repeated relaxation.
template <int Dim>
std::multiset<std::size_t> ridge_component_sizes(const Triangulation<Dim>& t) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a <= Dim; ++a)
    for (int b = a + 1; b <= Dim; ++b) pairs.push_back({a, b});
  const std::size_t per = pairs.size();
  std::vector<std::size_t> label(t.size() * per);
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = i;
  const auto index = [&](std::size_t s, int a, int b) {
    if (a > b) std::swap(a, b);
    return s * per + static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::pair{a, b}) - pairs.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& g : t.gluings())
    for (const auto& [a, b] : pairs)
      if (a == g.from.facet || b == g.from.facet)
        edges.push_back({index(g.from.simplex, a, b), index(g.to.simplex, g.map[a], g.map[b])});
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [u, v] : edges) {
      const std::size_t m = std::min(label[u], label[v]);
      if (label[u] != m || label[v] != m) {
        label[u] = label[v] = m;
        changed = true;
      }
    }
  }
  std::map<std::size_t, std::size_t> count;
  for (std::size_t l : label) ++count[l];
  std::multiset<std::size_t> out;
  for (const auto& [l, n] : count) out.insert(n);
  return out;
}

/// Return map of the cycle through (simplex, {lo, hi}) leaving via `exit`,
/// as a map on the start simplex's labels.
template <int Dim>
Perm<Dim + 1> brute_return(const Triangulation<Dim>& t, std::size_t simplex, int lo, int hi, int exit) {
  const auto d = directed(t);
  Perm<Dim + 1> acc;
  std::size_t s = simplex;
  int out = exit;
  const int first_keep = exit == lo ? hi : lo;
  int keep = first_keep;
  do {
    const Gluing<Dim>& g = d.at(FacetSlot{s, out});
    acc = g.map * acc;
    s = g.to.simplex;
    const int entered = g.to.facet;
    out = g.map[keep];
    keep = entered;
  } while (!(s == simplex && out == exit && keep == first_keep));
  return acc;
}

/// brute_return restricted to the face labels, compressed in increasing order.
template <int Dim>
Perm<Dim - 1> brute_face_return(const Triangulation<Dim>& t, std::size_t simplex, int lo, int hi) {
  const Perm<Dim + 1> full = brute_return(t, simplex, lo, hi, lo);
  std::vector<int> face;
  for (int v = 0; v <= Dim; ++v)
    if (v != lo && v != hi) face.push_back(v);
  std::array<int, Dim - 1> images{};
  for (std::size_t i = 0; i < face.size(); ++i)
    images[i] = static_cast<int>(std::find(face.begin(), face.end(), full[face[i]]) - face.begin());
  return Perm<Dim - 1>::from_images(images);
}

}  // namespace fixtures
