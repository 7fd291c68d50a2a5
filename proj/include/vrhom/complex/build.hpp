#pragma once

#include <set>
#include <vector>

#include "vrhom/closure.hpp"
#include "vrhom/complex/simplicial_complex.hpp"

namespace vrhom {

namespace detail {

/// Flag-style enumeration: layer k+1 extends each k-simplex σ by vertices w > max(σ)
/// accepted by `extends(σ, w)`. Every simplex is reached from the facet that drops
/// its largest vertex, so `extends` must hold exactly when σ ∪ {w} is a simplex.
template <class Extends>
SimplicialComplex expand_layers(SpaceRef space, std::vector<Simplex> vertices, std::size_t max_dim,
                                Extends&& extends) {
  const std::size_t n = space->size();
  std::vector<std::vector<Simplex>> layers;
  layers.push_back(std::move(vertices));
  for (std::size_t k = 0; k < max_dim; ++k) {
    std::vector<Simplex> next;
    for (const auto& s : layers[k])
      for (Index w = s.back() + 1; w < n; ++w)
        if (extends(s, w)) next.push_back(s.with_vertex(w));
    layers.push_back(std::move(next));
  }
  bool exhausted = true;
  for (const auto& s : layers[max_dim]) {
    for (Index w = s.back() + 1; w < n && exhausted; ++w) exhausted = !extends(s, w);
    if (!exhausted) break;
  }
  return SimplicialComplex(std::move(space), std::move(layers), max_dim, exhausted);
}

inline std::vector<Simplex> all_vertices(const SpaceRef& space) {
  std::vector<Simplex> out;
  for (Index i = 0; i < space->size(); ++i) out.push_back(Simplex{i});
  return out;
}

}  // namespace detail

/// Vietoris-Rips complex of a symmetric relation: the clique complex of its graph.
inline SimplicialComplex clique_complex(const Relation& u, std::size_t max_dim) {
  if (!u.is_symmetric()) {
    throw Error(ErrorKind::not_symmetric,
                "clique_complex needs a symmetric relation; use directed_clique_complex or symmetric_part");
  }
  return detail::expand_layers(u.space(), detail::all_vertices(u.space()), max_dim, [&](const Simplex& s, Index w) {
    for (Index v : s.vertices())
      if (!u.contains(v, w)) return false;
    return true;
  });
}

/// Whether some ordering of `vertices` makes every forward pair of distinct
/// vertices a pair of `u`. Greedy: repeatedly remove a vertex related to all
/// remaining ones.
inline bool is_directed_simplex(const Relation& u, std::vector<Index> vertices) {
  while (vertices.size() > 1) {
    auto source = std::find_if(vertices.begin(), vertices.end(), [&](Index v) {
      for (Index w : vertices)
        if (w != v && !u.contains(v, w)) return false;
      return true;
    });
    if (source == vertices.end()) return false;
    vertices.erase(source);
  }
  return true;
}

/// Directed clique complex: σ is a simplex iff some ordering of σ has every
/// forward pair in u. Agrees with clique_complex on symmetric relations.
inline SimplicialComplex directed_clique_complex(const Relation& u, std::size_t max_dim) {
  return detail::expand_layers(u.space(), detail::all_vertices(u.space()), max_dim, [&](const Simplex& s, Index w) {
    for (Index v : s.vertices())
      if (!u.contains(v, w) && !u.contains(w, v)) return false;
    return is_directed_simplex(u, s.with_vertex(w).vertices());
  });
}

/// Re-embeds a complex on subspace `points` (increasing order) into the ambient space.
inline SimplicialComplex embed(const SimplicialComplex& k, const SpaceRef& ambient, const IndexSet& points) {
  const std::vector<Index> map(points.begin(), points.end());
  std::vector<std::vector<Simplex>> layers(k.max_dim() + 1);
  for (std::size_t d = 0; d <= k.max_dim(); ++d) {
    for (const auto& s : k.simplices(d)) {
      std::vector<Index> v;
      for (Index i : s.vertices()) v.push_back(map.at(i));
      layers[d].push_back(Simplex(std::move(v)));
    }
  }
  return SimplicialComplex(ambient, std::move(layers), k.max_dim(), k.exhausted());
}

/// (Σ^X_U, Σ^A_{U_A}) with the subcomplex re-embedded on X's indices.
inline ComplexPair pair_complex(const Relation& u, const IndexSet& a, std::size_t max_dim) {
  if (a.empty()) throw Error(ErrorKind::invalid_argument, "pair_complex needs a non-empty subset");
  auto total = share(clique_complex(u, max_dim));
  auto sub = share(embed(clique_complex(relativize(u, a), max_dim), u.space(), a));
  return ComplexPair(std::move(total), std::move(sub));
}

/// Nerve: one vertex per cover set; a family of sets spans a simplex iff the
/// sets share a point.
inline SimplicialComplex nerve_of_cover(const Cover& u, std::size_t max_dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.sets()[i].empty()) throw Error(ErrorKind::invalid_argument, "cover contains an empty set");
    labels.push_back("U" + std::to_string(i));
  }
  auto space = make_space(std::move(labels));
  return detail::expand_layers(space, detail::all_vertices(space), max_dim, [&](const Simplex& s, Index w) {
    for (Index x : u.sets()[w]) {
      bool shared = true;
      for (Index v : s.vertices()) shared = shared && u.sets()[v].contains(x);
      if (shared) return true;
    }
    return false;
  });
}

/// Vietoris complex of a cover in Dowker's sense: σ is a simplex iff σ lies in
/// a single cover set. It is a subcomplex of clique_complex(vietoris_relation(u)).
inline SimplicialComplex vietoris_complex(const Cover& u, std::size_t max_dim) {
  return detail::expand_layers(u.space(), detail::all_vertices(u.space()), max_dim, [&](const Simplex& s, Index w) {
    for (const auto& set : u.sets()) {
      if (!set.contains(w)) continue;
      bool inside = true;
      for (Index v : s.vertices()) inside = inside && set.contains(v);
      if (inside) return true;
    }
    return false;
  });
}

}  // namespace vrhom
