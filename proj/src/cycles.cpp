#include "hypertri/cycles.hpp"

#include <algorithm>
#include <set>

namespace hypertri {

std::string to_string(const RidgeSlot& slot) {
  return "(" + std::to_string(slot.simplex) + ",{" + std::to_string(slot.lo) + "," +
         std::to_string(slot.hi) + "})";
}

const char* to_string(ReturnClass c) {
  switch (c) {
    case ReturnClass::identity: return "identity";
    case ReturnClass::transposition: return "transposition";
    case ReturnClass::three_cycle: return "three_cycle";
    case ReturnClass::other: return "other";
  }
  return "other";
}

template <int Dim>
RidgeCycle<Dim> trace_ridge_cycle(const Triangulation<Dim>& t, RidgeSlot start, int exit_facet) {
  if (start.lo >= start.hi || (exit_facet != start.lo && exit_facet != start.hi))
    throw std::invalid_argument("exit facet must be one of the slot's omitted labels");

  RidgeCycle<Dim> cycle;
  Perm<Dim + 1> acc;  // start labels -> current labels
  std::size_t s = start.simplex;
  int exit = exit_facet;
  int other = exit == start.lo ? start.hi : start.lo;
  const int start_other = other;
  // Each state is visited at most once per orbit.
  const std::size_t bound = t.size() * (Dim + 1) * Dim + 1;

  do {
    cycle.slots.push_back({s, std::min(exit, other), std::max(exit, other)});
    const auto& adj = t.adjacent(s, exit);
    if (!adj) throw NotClosedError(t.unpaired());
    acc = adj->map * acc;
    const int entry = adj->facet;
    const int next_exit = adj->map[other];
    s = adj->simplex;
    other = entry;
    exit = next_exit;
    if (cycle.slots.size() > bound) throw std::logic_error("ridge cycle did not close");
  } while (!(s == start.simplex && exit == exit_facet && other == start_other));

  std::array<int, Dim - 1> face{};
  for (int v = 0, k = 0; v <= Dim; ++v)
    if (v != start.lo && v != start.hi) face[k++] = v;
  std::array<int, Dim - 1> images{};
  for (int i = 0; i < Dim - 1; ++i) {
    const int img = acc[face[i]];
    images[i] = static_cast<int>(std::find(face.begin(), face.end(), img) - face.begin());
  }
  cycle.return_map = Perm<Dim - 1>::from_images(images);
  return cycle;
}

template <int Dim>
std::vector<RidgeCycle<Dim>> ridge_cycles(const Triangulation<Dim>& t) {
  t.require_closed();
  std::set<RidgeSlot> seen;
  std::vector<RidgeCycle<Dim>> out;
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (int lo = 0; lo <= Dim; ++lo) {
      for (int hi = lo + 1; hi <= Dim; ++hi) {
        const RidgeSlot slot{s, lo, hi};
        if (seen.contains(slot)) continue;
        auto cycle = trace_ridge_cycle(t, slot, lo);
        seen.insert(cycle.slots.begin(), cycle.slots.end());
        out.push_back(std::move(cycle));
      }
    }
  }
  return out;
}

bool is_manifold(const Triangulation4& t) {
  const auto cycles = face_cycles(t);
  return std::all_of(cycles.begin(), cycles.end(),
                     [](const FaceCycle& c) { return c.return_map.is_identity(); });
}

bool is_six_valent(const Triangulation4& t) {
  const auto cycles = face_cycles(t);
  return std::all_of(cycles.begin(), cycles.end(),
                     [](const FaceCycle& c) { return c.length() == 6; });
}

template RidgeCycle<3> trace_ridge_cycle<3>(const Triangulation<3>&, RidgeSlot, int);
template RidgeCycle<4> trace_ridge_cycle<4>(const Triangulation<4>&, RidgeSlot, int);
template std::vector<RidgeCycle<3>> ridge_cycles<3>(const Triangulation<3>&);
template std::vector<RidgeCycle<4>> ridge_cycles<4>(const Triangulation<4>&);

}  // namespace hypertri
