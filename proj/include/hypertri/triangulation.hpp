#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypertri/perm.hpp"

namespace hypertri {

/// Facet of a simplex, named by the label of the vertex it omits.
struct FacetSlot {
  std::size_t simplex = 0;
  int facet = 0;

  friend bool operator==(const FacetSlot&, const FacetSlot&) = default;
  friend auto operator<=>(const FacetSlot&, const FacetSlot&) = default;
};

std::string to_string(const FacetSlot& slot);

/// One facet pairing: `from` is glued to `to`, vertex label i of
/// `from.simplex` going to label map[i] of `to.simplex`.
template <int Dim>
struct Gluing {
  FacetSlot from;
  FacetSlot to;
  Perm<Dim + 1> map;

  Gluing inverse() const { return {to, from, map.inverse()}; }
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

struct StructuralError {
  enum class Kind { out_of_range, self_glued, opposite_vertex, duplicate_slot };
  Kind kind;
  std::size_t record;  // index into the input gluing list
  std::string message;
};

struct ValidationReport {
  std::size_t num_simplices = 0;
  std::size_t num_gluings = 0;
  bool closed = false;
  std::vector<FacetSlot> unpaired;
  std::vector<StructuralError> errors;

  bool ok() const { return errors.empty(); }
};

/// Raised when a gluing list violates the structural invariants.
class TriangulationError : public std::runtime_error {
 public:
  explicit TriangulationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Raised by analyses that need every facet glued.
class NotClosedError : public std::runtime_error {
 public:
  explicit NotClosedError(std::vector<FacetSlot> unpaired);
  const std::vector<FacetSlot>& unpaired() const { return unpaired_; }

 private:
  std::vector<FacetSlot> unpaired_;
};

/// Checks a raw gluing list. Never throws for structural problems; they are
/// collected in the report. An exact restatement of the inverse of an earlier
/// record is accepted and not counted twice.
template <int Dim>
ValidationReport validate(std::size_t num_simplices, std::span<const Gluing<Dim>> gluings);

/// A set of Dim-simplices with an involutive, possibly partial, pairing of
/// their facets. Labels are 0..Dim. Immutable once built.
template <int Dim>
class Triangulation {
 public:
  static constexpr int dimension = Dim;
  static constexpr int labels = Dim + 1;
  using PermType = Perm<Dim + 1>;

  struct Adjacent {
    std::size_t simplex;
    int facet;
    PermType map;

    friend bool operator==(const Adjacent&, const Adjacent&) = default;
  };

  /// Throws TriangulationError on any structural error, std::invalid_argument
  /// when num_simplices is zero.
  Triangulation(std::size_t num_simplices, std::span<const Gluing<Dim>> gluings);
  Triangulation(std::size_t num_simplices, const std::vector<Gluing<Dim>>& gluings)
      : Triangulation(num_simplices, std::span<const Gluing<Dim>>(gluings)) {}

  std::size_t size() const { return adj_.size(); }

  const std::optional<Adjacent>& adjacent(std::size_t simplex, int facet) const {
    return adj_[simplex][facet];
  }
  const std::optional<Adjacent>& adjacent(FacetSlot slot) const {
    return adj_[slot.simplex][slot.facet];
  }

  /// Each gluing once, stated from its lexicographically smaller slot, sorted.
  std::vector<Gluing<Dim>> gluings() const;
  std::size_t num_gluings() const;

  bool closed() const;
  std::vector<FacetSlot> unpaired() const;
  void require_closed() const {
    if (!closed()) throw NotClosedError(unpaired());
  }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<std::array<std::optional<Adjacent>, Dim + 1>> adj_;
};

template <int Dim>
ValidationReport validate(const Triangulation<Dim>& t) {
  ValidationReport r;
  r.num_simplices = t.size();
  r.num_gluings = t.num_gluings();
  r.unpaired = t.unpaired();
  r.closed = r.unpaired.empty();
  return r;
}

/// Orientation sign per simplex such that s(a) * s(b) * sign(map) == -1 for
/// every gluing, or nothing if no such assignment exists. Breadth-first from
/// the lowest-index simplex of each component, which gets +1.
template <int Dim>
std::optional<std::vector<int>> orientation(const Triangulation<Dim>& t) {
  std::vector<int> sign(t.size(), 0);
  for (std::size_t root = 0; root < t.size(); ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t s = todo.front();
      todo.pop();
      for (int f = 0; f <= Dim; ++f) {
        const auto& adj = t.adjacent(s, f);
        if (!adj) continue;
        const int want = -sign[s] * adj->map.sign();
        if (sign[adj->simplex] == 0) {
          sign[adj->simplex] = want;
          todo.push(adj->simplex);
        } else if (sign[adj->simplex] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

template <int Dim>
bool is_orientable(const Triangulation<Dim>& t) {
  return orientation(t).has_value();
}

/// Connected components as ascending simplex lists, ordered by least member.
template <int Dim>
std::vector<std::vector<std::size_t>> components(const Triangulation<Dim>& t);

template <int Dim>
bool is_connected(const Triangulation<Dim>& t) {
  return components(t).size() == 1;
}

/// Sub-triangulation spanned by the given simplices (renumbered in the given
/// order). Gluings leaving the set are dropped.
template <int Dim>
Triangulation<Dim> restrict_to(const Triangulation<Dim>& t, std::span<const std::size_t> simplices);

using Triangulation2 = Triangulation<2>;
using Triangulation3 = Triangulation<3>;
using Triangulation4 = Triangulation<4>;

extern template class Triangulation<2>;
extern template class Triangulation<3>;
extern template class Triangulation<4>;

}  // namespace hypertri
