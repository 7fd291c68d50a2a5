#pragma once

#include <random>
#include <vector>

#include "vrhom/closure.hpp"
#include "vrhom/relations.hpp"

namespace vrhom::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform_count(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Undirected edges of a G(n, p) graph.
inline std::vector<IndexPair> random_edges(Rng& rng, std::size_t n, double p) {
  std::vector<IndexPair> edges;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (coin(rng, p)) edges.emplace_back(i, j);
  return edges;
}

inline Relation random_graph_relation(Rng& rng, const SpaceRef& space, double p) {
  return graph_relation(random_edges(rng, space->size(), p), space, false);
}

inline IndexSet random_subset(Rng& rng, std::size_t n, double p) {
  IndexSet s;
  for (Index i = 0; i < n; ++i)
    if (coin(rng, p)) s.insert(i);
  return s;
}

/// Semi-pseudometric with distances drawn from {0, 1/4, …, 2}; zero distances
/// between distinct points occur with probability zero_p.
inline SemiPseudometric random_metric(Rng& rng, const SpaceRef& space, double zero_p = 0.05) {
  const std::size_t n = space->size();
  std::vector<double> table(n * n, 0.0);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const double v = coin(rng, zero_p) ? 0.0 : static_cast<double>(uniform_count(rng, 1, 8)) / 4.0;
      table[i * n + j] = table[j * n + i] = v;
    }
  return SemiPseudometric(space, std::move(table));
}

/// Cover with at most max_sets non-empty sets; uncovered points are added to a
/// random set.
inline Cover random_cover(Rng& rng, const SpaceRef& space, std::size_t max_sets) {
  const std::size_t n = space->size();
  const std::size_t count = uniform_count(rng, 1, max_sets);
  std::vector<IndexSet> sets(count);
  for (auto& s : sets) s = random_subset(rng, n, 0.4);
  for (Index x = 0; x < n; ++x) {
    bool covered = false;
    for (const auto& s : sets) covered = covered || s.contains(x);
    if (!covered) sets[uniform_count(rng, 0, count - 1)].insert(x);
  }
  std::erase_if(sets, [](const IndexSet& s) { return s.empty(); });
  return Cover(space, std::move(sets));
}

}  // namespace vrhom::gen
