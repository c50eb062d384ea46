#include "hypertri/triangulation.hpp"

#include <algorithm>
#include <map>

namespace hypertri {

std::string to_string(const FacetSlot& slot) {
  return "(" + std::to_string(slot.simplex) + "," + std::to_string(slot.facet) + ")";
}

namespace {

std::string first_error_line(const ValidationReport& r) {
  if (r.errors.empty()) return "invalid triangulation";
  return "gluing record " + std::to_string(r.errors.front().record) + ": " +
         r.errors.front().message;
}

std::string unpaired_line(const std::vector<FacetSlot>& unpaired) {
  std::string s = "not closed: " + std::to_string(unpaired.size()) + " unpaired facet slot(s)";
  for (const auto& u : unpaired) s += " " + to_string(u);
  return s;
}

}  // namespace

TriangulationError::TriangulationError(ValidationReport report)
    : std::runtime_error(first_error_line(report)), report_(std::move(report)) {}

NotClosedError::NotClosedError(std::vector<FacetSlot> unpaired)
    : std::runtime_error(unpaired_line(unpaired)), unpaired_(std::move(unpaired)) {}

template <int Dim>
ValidationReport validate(std::size_t num_simplices, std::span<const Gluing<Dim>> gluings) {
  using Kind = StructuralError::Kind;
  ValidationReport r;
  r.num_simplices = num_simplices;

  // slot -> (partner slot, map) for every accepted gluing, both directions.
  std::map<FacetSlot, Gluing<Dim>> taken;
  const auto in_range = [&](const FacetSlot& s) {
    return s.simplex < num_simplices && s.facet >= 0 && s.facet <= Dim;
  };

  for (std::size_t i = 0; i < gluings.size(); ++i) {
    const Gluing<Dim>& g = gluings[i];
    if (!in_range(g.from) || !in_range(g.to)) {
      r.errors.push_back({Kind::out_of_range, i,
                          "slot out of range: " + to_string(g.from) + " -> " + to_string(g.to)});
      continue;
    }
    if (g.from == g.to) {
      r.errors.push_back({Kind::self_glued, i, "facet glued to itself: " + to_string(g.from)});
      continue;
    }
    if (g.map[g.from.facet] != g.to.facet) {
      r.errors.push_back({Kind::opposite_vertex, i,
                          "map sends omitted vertex " + std::to_string(g.from.facet) + " to " +
                              std::to_string(g.map[g.from.facet]) + ", expected " +
                              std::to_string(g.to.facet)});
      continue;
    }
    const auto a = taken.find(g.from);
    const auto b = taken.find(g.to);
    if (a != taken.end() && a->second == g) continue;  // restated inverse
    if (a != taken.end() || b != taken.end()) {
      const FacetSlot& dup = a != taken.end() ? g.from : g.to;
      r.errors.push_back({Kind::duplicate_slot, i, "duplicate gluing on slot " + to_string(dup)});
      continue;
    }
    taken.emplace(g.from, g);
    taken.emplace(g.to, g.inverse());
    ++r.num_gluings;
  }

  for (std::size_t s = 0; s < num_simplices; ++s)
    for (int f = 0; f <= Dim; ++f)
      if (!taken.contains(FacetSlot{s, f})) r.unpaired.push_back({s, f});
  r.closed = r.unpaired.empty();
  return r;
}

template <int Dim>
Triangulation<Dim>::Triangulation(std::size_t num_simplices,
                                  std::span<const Gluing<Dim>> gluings) {
  if (num_simplices == 0) throw std::invalid_argument("a triangulation needs at least one simplex");
  ValidationReport report = validate<Dim>(num_simplices, gluings);
  if (!report.ok()) throw TriangulationError(std::move(report));
  adj_.resize(num_simplices);
  for (const auto& g : gluings) {
    adj_[g.from.simplex][g.from.facet] = Adjacent{g.to.simplex, g.to.facet, g.map};
    adj_[g.to.simplex][g.to.facet] = Adjacent{g.from.simplex, g.from.facet, g.map.inverse()};
  }
}

template <int Dim>
std::vector<Gluing<Dim>> Triangulation<Dim>::gluings() const {
  std::vector<Gluing<Dim>> out;
  for (std::size_t s = 0; s < adj_.size(); ++s) {
    for (int f = 0; f <= Dim; ++f) {
      const auto& a = adj_[s][f];
      if (!a) continue;
      const FacetSlot from{s, f};
      const FacetSlot to{a->simplex, a->facet};
      if (from < to) out.push_back({from, to, a->map});
    }
  }
  return out;
}

template <int Dim>
std::size_t Triangulation<Dim>::num_gluings() const {
  std::size_t glued = 0;
  for (const auto& row : adj_)
    for (const auto& a : row)
      if (a) ++glued;
  return glued / 2;
}

template <int Dim>
bool Triangulation<Dim>::closed() const {
  for (const auto& row : adj_)
    for (const auto& a : row)
      if (!a) return false;
  return true;
}

template <int Dim>
std::vector<FacetSlot> Triangulation<Dim>::unpaired() const {
  std::vector<FacetSlot> out;
  for (std::size_t s = 0; s < adj_.size(); ++s)
    for (int f = 0; f <= Dim; ++f)
      if (!adj_[s][f]) out.push_back({s, f});
  return out;
}

template <int Dim>
std::vector<std::vector<std::size_t>> components(const Triangulation<Dim>& t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(t.size(), false);
  for (std::size_t root = 0; root < t.size(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int f = 0; f <= Dim; ++f) {
        const auto& adj = t.adjacent(comp[i], f);
        if (adj && !seen[adj->simplex]) {
          seen[adj->simplex] = true;
          comp.push_back(adj->simplex);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

template <int Dim>
Triangulation<Dim> restrict_to(const Triangulation<Dim>& t, std::span<const std::size_t> simplices) {
  std::vector<std::size_t> index(t.size(), SIZE_MAX);
  for (std::size_t i = 0; i < simplices.size(); ++i) index[simplices[i]] = i;
  std::vector<Gluing<Dim>> out;
  for (const auto& g : t.gluings()) {
    const std::size_t a = index[g.from.simplex];
    const std::size_t b = index[g.to.simplex];
    if (a == SIZE_MAX || b == SIZE_MAX) continue;
    out.push_back({{a, g.from.facet}, {b, g.to.facet}, g.map});
  }
  return Triangulation<Dim>(simplices.size(), out);
}

#define HYPERTRI_INSTANTIATE(D)                                                              \
  template class Triangulation<D>;                                                           \
  template ValidationReport validate<D>(std::size_t, std::span<const Gluing<D>>);            \
  template std::vector<std::vector<std::size_t>> components<D>(const Triangulation<D>&);     \
  template Triangulation<D> restrict_to<D>(const Triangulation<D>&, std::span<const std::size_t>);

HYPERTRI_INSTANTIATE(2)
HYPERTRI_INSTANTIATE(3)
HYPERTRI_INSTANTIATE(4)

#undef HYPERTRI_INSTANTIATE

}  // namespace hypertri
