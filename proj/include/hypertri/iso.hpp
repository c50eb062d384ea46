#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertri/perm.hpp"
#include "hypertri/triangulation.hpp"

namespace hypertri {

enum class OrientationEffect { preserves, reverses, undefined };

const char* to_string(OrientationEffect e);

/// Simplex i of the source goes to simplex simplex_map[i] of the target,
/// its label v going to label label_maps[i][v].
template <int Dim>
struct Isomorphism {
  std::vector<std::size_t> simplex_map;
  std::vector<Perm<Dim + 1>> label_maps;
  OrientationEffect orientation_effect = OrientationEffect::undefined;

  std::size_t fixed_simplices() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < simplex_map.size(); ++i)
      if (simplex_map[i] == i) ++n;
    return n;
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < simplex_map.size(); ++i)
      if (simplex_map[i] != i || !label_maps[i].is_identity()) return false;
    return true;
  }
  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

/// Transports every gluing of `source` along `iso`.
template <int Dim>
Triangulation<Dim> apply(const Isomorphism<Dim>& iso, const Triangulation<Dim>& source);

/// True when `iso` carries every gluing of `a` exactly onto a gluing of `b`
/// and every unglued facet onto an unglued facet.
template <int Dim>
bool is_isomorphism(const Isomorphism<Dim>& iso, const Triangulation<Dim>& a,
                    const Triangulation<Dim>& b);

/// second after first. The orientation effect is the product of effects.
template <int Dim>
Isomorphism<Dim> compose(const Isomorphism<Dim>& second, const Isomorphism<Dim>& first);

template <int Dim>
Isomorphism<Dim> inverse(const Isomorphism<Dim>& iso);

/// Fills in orientation_effect of `iso : a -> b`.
template <int Dim>
OrientationEffect orientation_effect(const Isomorphism<Dim>& iso, const Triangulation<Dim>& a,
                                     const Triangulation<Dim>& b);

/// First isomorphism in seed order (target simplex ascending, then label
/// permutation in lexicographic image order, for the least unmatched source
/// simplex), or nothing. Disconnected inputs are matched component by
/// component.
template <int Dim>
std::optional<Isomorphism<Dim>> isomorphic(const Triangulation<Dim>& a, const Triangulation<Dim>& b);

/// Canonical string, equal for two triangulations exactly when they are
/// combinatorially isomorphic. Format for a connected triangulation:
///
///   <dim>:<n>|<simplex 0>|<simplex 1>|...
///
/// where each simplex is its Dim+1 facets joined by ';', a facet being
/// "<dest>/<images>" (images as a digit string) or "_" when unglued.
/// Simplices appear in canonical breadth-first order. Disconnected inputs
/// give the sorted component signatures joined by " + ".
template <int Dim>
std::string signature(const Triangulation<Dim>& t);

/// Every self-isomorphism of a connected triangulation, in seed order.
template <int Dim>
std::vector<Isomorphism<Dim>> symmetries(const Triangulation<Dim>& t);

/// Stable 64-bit FNV-1a hash.
std::uint64_t fnv1a(const std::string& s);
/// First `n` lowercase hex digits of fnv1a(s).
std::string short_hash(const std::string& s, std::size_t n = 12);

}  // namespace hypertri
