#include "hypertri/iso.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace hypertri {

const char* to_string(OrientationEffect e) {
  switch (e) {
    case OrientationEffect::preserves: return "preserves";
    case OrientationEffect::reverses: return "reverses";
    case OrientationEffect::undefined: return "undefined";
  }
  return "undefined";
}

namespace {

constexpr std::size_t kUnset = SIZE_MAX;

// Partial map from a into b, grown one connected component at a time.
template <int Dim>
struct PartialMap {
  std::vector<std::size_t> forward;  // a simplex -> b simplex
  std::vector<bool> target_used;
  std::vector<Perm<Dim + 1>> labels;

  PartialMap(std::size_t na, std::size_t nb)
      : forward(na, kUnset), target_used(nb, false), labels(na) {}
};

// Maps the component of a containing `root` to b, sending root to `target`
// with labels `seed`. Leaves `m` untouched on failure.
template <int Dim>
bool extend(const Triangulation<Dim>& a, const Triangulation<Dim>& b, std::size_t root,
            std::size_t target, const Perm<Dim + 1>& seed, PartialMap<Dim>& m) {
  if (m.target_used[target]) return false;
  PartialMap<Dim> trial = m;
  trial.forward[root] = target;
  trial.target_used[target] = true;
  trial.labels[root] = seed;
  std::vector<std::size_t> queue{root};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t s = queue[qi];
    const std::size_t img = trial.forward[s];
    const Perm<Dim + 1>& pi = trial.labels[s];
    for (int f = 0; f <= Dim; ++f) {
      const auto& src = a.adjacent(s, f);
      const auto& dst = b.adjacent(img, pi[f]);
      if (src.has_value() != dst.has_value()) return false;
      if (!src) continue;
      // Labels of the neighbour are forced: pi' = dst.map * pi * src.map^-1.
      const Perm<Dim + 1> forced = dst->map * pi * src->map.inverse();
      const std::size_t n = src->simplex;
      if (trial.forward[n] == kUnset) {
        if (trial.target_used[dst->simplex]) return false;
        trial.forward[n] = dst->simplex;
        trial.target_used[dst->simplex] = true;
        trial.labels[n] = forced;
        queue.push_back(n);
      } else if (trial.forward[n] != dst->simplex || trial.labels[n] != forced) {
        return false;
      }
    }
  }
  m = std::move(trial);
  return true;
}

template <int Dim>
Isomorphism<Dim> finish(PartialMap<Dim>&& m, const Triangulation<Dim>& a,
                        const Triangulation<Dim>& b) {
  Isomorphism<Dim> iso{std::move(m.forward), std::move(m.labels), OrientationEffect::undefined};
  iso.orientation_effect = orientation_effect(iso, a, b);
  return iso;
}

template <int Dim>
std::vector<int> canonical_code(const Triangulation<Dim>& t, std::size_t root,
                                const Perm<Dim + 1>& seed, const std::vector<int>* best) {
  const std::size_t n = t.size();
  std::vector<std::size_t> order{root};
  std::vector<std::size_t> new_index(n, kUnset);
  std::vector<Perm<Dim + 1>> relabel(n);  // old labels -> new labels
  new_index[root] = 0;
  relabel[root] = seed;

  std::vector<int> code;
  code.reserve(2 * n * (Dim + 1));
  bool tied = best != nullptr;
  const auto emit = [&](int v) {
    if (tied) {
      const int b = (*best)[code.size()];
      if (v > b) return false;
      if (v < b) tied = false;
    }
    code.push_back(v);
    return true;
  };

  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t s = order[i];
    const Perm<Dim + 1> back = relabel[s].inverse();
    for (int nf = 0; nf <= Dim; ++nf) {
      const auto& adj = t.adjacent(s, back[nf]);
      if (!adj) {
        if (!emit(-1) || !emit(0)) return {};
        continue;
      }
      const std::size_t o = adj->simplex;
      if (new_index[o] == kUnset) {
        new_index[o] = order.size();
        order.push_back(o);
        relabel[o] = relabel[s] * adj->map.inverse();
      }
      const Perm<Dim + 1> glue = relabel[o] * adj->map * back;
      if (!emit(static_cast<int>(new_index[o])) || !emit(glue.lex_index())) return {};
    }
  }
  return code;
}

template <int Dim>
std::string render_code(const std::vector<int>& code, std::size_t n) {
  std::string out = std::to_string(Dim) + ":" + std::to_string(n);
  std::size_t k = 0;
  for (std::size_t s = 0; s < n; ++s) {
    out += '|';
    for (int f = 0; f <= Dim; ++f, k += 2) {
      if (f > 0) out += ';';
      if (code[k] < 0) {
        out += '_';
      } else {
        out += std::to_string(code[k]) + "/" + Perm<Dim + 1>::from_lex_index(code[k + 1]).str();
      }
    }
  }
  return out;
}

template <int Dim>
std::string connected_signature(const Triangulation<Dim>& t) {
  std::vector<int> best;
  for (std::size_t root = 0; root < t.size(); ++root) {
    for (const auto& p : Perm<Dim + 1>::all()) {
      auto code = canonical_code(t, root, p, best.empty() ? nullptr : &best);
      if (!code.empty() && (best.empty() || code < best)) best = std::move(code);
    }
  }
  return render_code<Dim>(best, t.size());
}

}  // namespace

template <int Dim>
Triangulation<Dim> apply(const Isomorphism<Dim>& iso, const Triangulation<Dim>& source) {
  if (iso.simplex_map.size() != source.size())
    throw std::invalid_argument("isomorphism size does not match the triangulation");
  std::vector<Gluing<Dim>> out;
  for (const auto& g : source.gluings()) {
    const auto& pa = iso.label_maps[g.from.simplex];
    const auto& pb = iso.label_maps[g.to.simplex];
    out.push_back({{iso.simplex_map[g.from.simplex], pa[g.from.facet]},
                   {iso.simplex_map[g.to.simplex], pb[g.to.facet]},
                   pb * g.map * pa.inverse()});
  }
  return Triangulation<Dim>(source.size(), out);
}

template <int Dim>
bool is_isomorphism(const Isomorphism<Dim>& iso, const Triangulation<Dim>& a,
                    const Triangulation<Dim>& b) {
  if (a.size() != b.size() || iso.simplex_map.size() != a.size() ||
      iso.label_maps.size() != a.size())
    return false;
  std::vector<bool> hit(b.size(), false);
  for (std::size_t s : iso.simplex_map) {
    if (s >= b.size() || hit[s]) return false;
    hit[s] = true;
  }
  for (std::size_t s = 0; s < a.size(); ++s) {
    const auto& pi = iso.label_maps[s];
    for (int f = 0; f <= Dim; ++f) {
      const auto& src = a.adjacent(s, f);
      const auto& dst = b.adjacent(iso.simplex_map[s], pi[f]);
      if (src.has_value() != dst.has_value()) return false;
      if (!src) continue;
      if (dst->simplex != iso.simplex_map[src->simplex]) return false;
      if (dst->map * pi != iso.label_maps[src->simplex] * src->map) return false;
    }
  }
  return true;
}

template <int Dim>
Isomorphism<Dim> compose(const Isomorphism<Dim>& second, const Isomorphism<Dim>& first) {
  Isomorphism<Dim> out;
  out.simplex_map.resize(first.simplex_map.size());
  out.label_maps.resize(first.simplex_map.size());
  for (std::size_t s = 0; s < first.simplex_map.size(); ++s) {
    const std::size_t mid = first.simplex_map[s];
    out.simplex_map[s] = second.simplex_map[mid];
    out.label_maps[s] = second.label_maps[mid] * first.label_maps[s];
  }
  using E = OrientationEffect;
  if (first.orientation_effect == E::undefined || second.orientation_effect == E::undefined)
    out.orientation_effect = E::undefined;
  else
    out.orientation_effect = first.orientation_effect == second.orientation_effect ? E::preserves
                                                                                    : E::reverses;
  return out;
}

template <int Dim>
Isomorphism<Dim> inverse(const Isomorphism<Dim>& iso) {
  Isomorphism<Dim> out;
  out.simplex_map.resize(iso.simplex_map.size());
  out.label_maps.resize(iso.simplex_map.size());
  for (std::size_t s = 0; s < iso.simplex_map.size(); ++s) {
    out.simplex_map[iso.simplex_map[s]] = s;
    out.label_maps[iso.simplex_map[s]] = iso.label_maps[s].inverse();
  }
  out.orientation_effect = iso.orientation_effect;
  return out;
}

template <int Dim>
OrientationEffect orientation_effect(const Isomorphism<Dim>& iso, const Triangulation<Dim>& a,
                                     const Triangulation<Dim>& b) {
  const auto oa = orientation(a);
  const auto ob = orientation(b);
  if (!oa || !ob) return OrientationEffect::undefined;
  int effect = 0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    const int e = (*oa)[s] * (*ob)[iso.simplex_map[s]] * iso.label_maps[s].sign();
    if (effect != 0 && e != effect) return OrientationEffect::undefined;
    effect = e;
  }
  return effect > 0 ? OrientationEffect::preserves : OrientationEffect::reverses;
}

template <int Dim>
std::optional<Isomorphism<Dim>> isomorphic(const Triangulation<Dim>& a, const Triangulation<Dim>& b) {
  if (a.size() != b.size()) return std::nullopt;
  PartialMap<Dim> m(a.size(), b.size());
  for (const auto& comp : components(a)) {
    const std::size_t root = comp.front();
    bool matched = false;
    for (std::size_t target = 0; target < b.size() && !matched; ++target) {
      if (m.target_used[target]) continue;
      for (const auto& p : Perm<Dim + 1>::all())
        if ((matched = extend(a, b, root, target, p, m))) break;
    }
    if (!matched) return std::nullopt;
  }
  return finish(std::move(m), a, b);
}

template <int Dim>
std::string signature(const Triangulation<Dim>& t) {
  const auto comps = components(t);
  if (comps.size() == 1) return connected_signature(t);
  std::vector<std::string> parts;
  for (const auto& c : comps) parts.push_back(connected_signature(restrict_to(t, c)));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

template <int Dim>
std::vector<Isomorphism<Dim>> symmetries(const Triangulation<Dim>& t) {
  if (!is_connected(t)) throw std::invalid_argument("symmetries need a connected triangulation");
  std::vector<Isomorphism<Dim>> out;
  for (std::size_t target = 0; target < t.size(); ++target) {
    for (const auto& p : Perm<Dim + 1>::all()) {
      PartialMap<Dim> m(t.size(), t.size());
      if (extend(t, t, 0, target, p, m)) out.push_back(finish(std::move(m), t, t));
    }
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string short_hash(const std::string& s, std::size_t n) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
  return std::string(buf, std::min<std::size_t>(n, 16));
}

#define HYPERTRI_INSTANTIATE(D)                                                                  \
  template Triangulation<D> apply<D>(const Isomorphism<D>&, const Triangulation<D>&);            \
  template bool is_isomorphism<D>(const Isomorphism<D>&, const Triangulation<D>&,                \
                                  const Triangulation<D>&);                                      \
  template Isomorphism<D> compose<D>(const Isomorphism<D>&, const Isomorphism<D>&);              \
  template Isomorphism<D> inverse<D>(const Isomorphism<D>&);                                     \
  template OrientationEffect orientation_effect<D>(const Isomorphism<D>&, const Triangulation<D>&, \
                                                   const Triangulation<D>&);                     \
  template std::optional<Isomorphism<D>> isomorphic<D>(const Triangulation<D>&,                  \
                                                       const Triangulation<D>&);                 \
  template std::string signature<D>(const Triangulation<D>&);                                    \
  template std::vector<Isomorphism<D>> symmetries<D>(const Triangulation<D>&);

HYPERTRI_INSTANTIATE(2)
HYPERTRI_INSTANTIATE(3)
HYPERTRI_INSTANTIATE(4)

#undef HYPERTRI_INSTANTIATE

}  // namespace hypertri
