#pragma once

#include "oracles.hpp"
#include "vrhom/vrhom.hpp"

namespace oracle {

inline Adjacency adjacency(const vrhom::Relation& u) {
  Adjacency adj(u.size(), std::vector<bool>(u.size(), false));
  for (auto [i, j] : u.pairs()) adj[i][j] = true;
  return adj;
}

inline Layers layers(const vrhom::SimplicialComplex& k) {
  Layers out;
  for (std::size_t d = 0; d <= k.max_dim(); ++d) {
    std::vector<Vertices> layer;
    for (const auto& s : k.simplices(d)) layer.push_back(s.vertices());
    out.push_back(std::move(layer));
  }
  return out;
}

inline std::vector<std::size_t> prefix(std::vector<std::size_t> v, std::size_t n) {
  v.resize(std::min(v.size(), n));
  return v;
}

inline vrhom::SemiPseudometric unit_square() {
  const double r = std::sqrt(2.0);
  return vrhom::SemiPseudometric(vrhom::make_space(std::vector<std::string>{"a", "b", "c", "d"}),
                                 {0, 1, r, 1,  //
                                  1, 0, 1, r,  //
                                  r, 1, 0, 1,  //
                                  1, r, 1, 0});
}

inline vrhom::Relation cycle(std::size_t n) {
  std::vector<vrhom::IndexPair> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return vrhom::graph_relation(edges, vrhom::make_space(n), false);
}

inline vrhom::Relation path(std::size_t n) {
  std::vector<vrhom::IndexPair> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return vrhom::graph_relation(edges, vrhom::make_space(n), false);
}

inline std::vector<vrhom::Simplex> rp2_triangles() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
}

}  // namespace oracle
