#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "vrhom/relations/space.hpp"

namespace vrhom {

/// A relation U on a finite space. Every constructor adjoins the diagonal, so
/// U always contains {(x, x)}.
class Relation {
 public:
  Relation(SpaceRef space, const std::vector<IndexPair>& pairs) : Relation(std::move(space)) {
    for (auto [i, j] : pairs) {
      require_in_range(space_, i);
      require_in_range(space_, j);
      bits_[i * size() + j] = 1;
    }
  }

  static Relation diagonal(SpaceRef space) { return Relation(std::move(space)); }

  static Relation full(SpaceRef space) {
    Relation r(std::move(space));
    std::fill(r.bits_.begin(), r.bits_.end(), std::uint8_t{1});
    return r;
  }

  /// Relation whose pairs are exactly those accepted by `pred(i, j)`, plus the diagonal.
  template <class Pred>
  static Relation from_predicate(SpaceRef space, Pred&& pred) {
    Relation r(std::move(space));
    const std::size_t n = r.size();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (i != j && pred(i, j)) r.bits_[i * n + j] = 1;
    return r;
  }

  const SpaceRef& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_->size(); }

  bool contains(Index i, Index j) const { return bits_[i * size() + j] != 0; }

  /// Ordered pairs in row-major order.
  std::vector<IndexPair> pairs() const {
    std::vector<IndexPair> out;
    const std::size_t n = size();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (contains(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::size_t pair_count() const {
    std::size_t count = 0;
    for (auto b : bits_) count += b;
    return count;
  }

  bool is_symmetric() const {
    const std::size_t n = size();
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (contains(i, j) != contains(j, i)) return false;
    return true;
  }

  bool is_subset_of(const Relation& other) const {
    require_same_space(space_, other.space_, "subset test across different spaces");
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] && !other.bits_[k]) return false;
    return true;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return same_space(a.space_, b.space_) && a.bits_ == b.bits_;
  }

 private:
  explicit Relation(SpaceRef space) : space_(std::move(space)), bits_(space_->size() * space_->size(), 0) {
    for (Index i = 0; i < size(); ++i) bits_[i * size() + i] = 1;
  }

  SpaceRef space_;
  std::vector<std::uint8_t> bits_;
};

/// U⁻¹ = {(y, x) | (x, y) ∈ U}.
inline Relation relation_inverse(const Relation& u) {
  return Relation::from_predicate(u.space(), [&](Index i, Index j) { return u.contains(j, i); });
}

/// U[A] = {y | (a, y) ∈ U for some a ∈ A}.
inline IndexSet relation_image(const Relation& u, const IndexSet& a) {
  require_in_range(u.space(), a);
  IndexSet out;
  for (Index y = 0; y < u.size(); ++y) {
    for (Index x : a) {
      if (u.contains(x, y)) {
        out.insert(out.end(), y);
        break;
      }
    }
  }
  return out;
}

inline Relation relation_intersect(const Relation& u, const Relation& v) {
  require_same_space(u.space(), v.space(), "intersection of relations on different spaces");
  return Relation::from_predicate(u.space(),
                                  [&](Index i, Index j) { return u.contains(i, j) && v.contains(i, j); });
}

/// U ∩ U⁻¹.
inline Relation symmetric_part(const Relation& u) {
  return Relation::from_predicate(u.space(),
                                  [&](Index i, Index j) { return u.contains(i, j) && u.contains(j, i); });
}

/// Relation generated by a graph's edges. Undirected edges contribute both orientations.
inline Relation graph_relation(const std::vector<IndexPair>& edges, SpaceRef space, bool directed) {
  std::vector<IndexPair> pairs;
  pairs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    pairs.emplace_back(u, v);
    if (!directed) pairs.emplace_back(v, u);
  }
  return Relation(std::move(space), pairs);
}

/// ((x, y), (x', y')) related iff (x, x') ∈ u and (y, y') ∈ v. Row-major point indexing.
inline Relation product_relation(const Relation& u, const Relation& v) {
  const std::size_t ny = v.size();
  return Relation::from_predicate(product_space(u.space(), v.space()), [&](Index a, Index b) {
    return u.contains(a / ny, b / ny) && v.contains(a % ny, b % ny);
  });
}

/// U_A = U ∩ (A × A), reindexed onto the subspace A (increasing index order).
inline Relation relativize(const Relation& u, const IndexSet& a) {
  if (a.empty()) throw Error(ErrorKind::invalid_argument, "relativize needs a non-empty subset");
  require_in_range(u.space(), a);
  const std::vector<Index> ambient(a.begin(), a.end());
  return Relation::from_predicate(subspace(u.space(), a), [&](Index i, Index j) {
    return u.contains(ambient[i], ambient[j]);
  });
}

}  // namespace vrhom
