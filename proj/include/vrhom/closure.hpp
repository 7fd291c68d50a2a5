#pragma once

#include <string>
#include <vector>

#include "vrhom/relations.hpp"

namespace vrhom {

/// Additive Čech closure operator, stored as the closures N(x) = c({x}).
/// c(A) is the union of N(x) over x in A, so c(∅) = ∅ and c is additive.
class AdditiveClosure {
 public:
  AdditiveClosure(SpaceRef space, std::vector<IndexSet> neighborhoods)
      : space_(std::move(space)), nbhd_(std::move(neighborhoods)) {
    if (nbhd_.size() != space_->size()) {
      throw Error(ErrorKind::invalid_argument, "one neighborhood per point required");
    }
    for (Index x = 0; x < nbhd_.size(); ++x) {
      require_in_range(space_, nbhd_[x]);
      nbhd_[x].insert(x);
    }
  }

  static AdditiveClosure discrete(SpaceRef space) {
    std::vector<IndexSet> n(space->size());
    return AdditiveClosure(std::move(space), std::move(n));
  }

  const SpaceRef& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_->size(); }
  const IndexSet& neighborhood(Index x) const { return nbhd_.at(x); }
  const std::vector<IndexSet>& neighborhoods() const noexcept { return nbhd_; }

  friend bool operator==(const AdditiveClosure& a, const AdditiveClosure& b) {
    return same_space(a.space_, b.space_) && a.nbhd_ == b.nbhd_;
  }

 private:
  SpaceRef space_;
  std::vector<IndexSet> nbhd_;
};

/// A finite family of subsets whose union is the whole space.
class Cover {
 public:
  Cover(SpaceRef space, std::vector<IndexSet> sets) : space_(std::move(space)), sets_(std::move(sets)) {
    IndexSet seen;
    for (const auto& s : sets_) {
      require_in_range(space_, s);
      seen.insert(s.begin(), s.end());
    }
    if (seen.size() != space_->size()) {
      auto missing = set_difference(all_points(space_), seen);
      throw Error(ErrorKind::not_a_cover, "point '" + space_->label(*missing.begin()) + "' lies in no set");
    }
  }

  const SpaceRef& space() const noexcept { return space_; }
  const std::vector<IndexSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }

  friend bool operator==(const Cover& a, const Cover& b) {
    return same_space(a.space_, b.space_) && a.sets_ == b.sets_;
  }

 private:
  SpaceRef space_;
  std::vector<IndexSet> sets_;
};

inline IndexSet closure_of_set(const AdditiveClosure& c, const IndexSet& a) {
  require_in_range(c.space(), a);
  IndexSet out;
  for (Index x : a) out.insert(c.neighborhood(x).begin(), c.neighborhood(x).end());
  return out;
}

/// i(A) = X − c(X − A).
inline IndexSet interior_set(const AdditiveClosure& c, const IndexSet& a) {
  const IndexSet everything = all_points(c.space());
  return set_difference(everything, closure_of_set(c, set_difference(everything, a)));
}

struct InteriorCoverVerdict {
  bool interior_cover = true;
  IndexSet uncovered;
};

inline InteriorCoverVerdict is_interior_cover(const AdditiveClosure& c, const Cover& u) {
  require_same_space(c.space(), u.space(), "closure and cover on different spaces");
  IndexSet covered;
  for (const auto& s : u.sets()) {
    auto inner = interior_set(c, s);
    covered.insert(inner.begin(), inner.end());
  }
  InteriorCoverVerdict verdict;
  verdict.uncovered = set_difference(all_points(c.space()), covered);
  verdict.interior_cover = verdict.uncovered.empty();
  return verdict;
}

/// V_𝒰 = {(x, y) | x, y ∈ U for some U ∈ 𝒰}.
inline Relation vietoris_relation(const Cover& u) {
  std::vector<IndexPair> pairs;
  for (const auto& s : u.sets())
    for (Index x : s)
      for (Index y : s) pairs.emplace_back(x, y);
  return Relation(u.space(), pairs);
}

/// R_𝒰 = {(x, y) | some U has x ∈ i(U), y ∈ U, or y ∈ i(U), x ∈ U}.
inline Relation ii_relation(const AdditiveClosure& c, const Cover& u) {
  auto verdict = is_interior_cover(c, u);
  if (!verdict.interior_cover) {
    throw Error(ErrorKind::not_interior_cover,
                "point '" + c.space()->label(*verdict.uncovered.begin()) + "' is interior to no set");
  }
  std::vector<IndexPair> pairs;
  for (const auto& s : u.sets()) {
    for (Index x : interior_set(c, s)) {
      for (Index y : s) {
        pairs.emplace_back(x, y);
        pairs.emplace_back(y, x);
      }
    }
  }
  return Relation(u.space(), pairs);
}

/// True iff every set of `fine` lies inside some set of `coarse`.
inline bool cover_refines(const Cover& coarse, const Cover& fine) {
  require_same_space(coarse.space(), fine.space(), "covers on different spaces");
  for (const auto& f : fine.sets()) {
    bool inside = false;
    for (const auto& c : coarse.sets()) inside = inside || is_subset(f, c);
    if (!inside) return false;
  }
  return true;
}

/// c_r(A) = {x | d(x, A) <= r}.
inline AdditiveClosure metric_closure_space(const SemiPseudometric& d, double r) {
  require_non_negative(r, "radius");
  std::vector<IndexSet> n(d.size());
  for (Index x = 0; x < d.size(); ++x)
    for (Index y = 0; y < d.size(); ++y)
      if (d(x, y) <= r) n[x].insert(y);
  return AdditiveClosure(d.space(), std::move(n));
}

/// c_G(A) = A ∪ {w | w adjacent to some v ∈ A}.
inline AdditiveClosure graph_closure_space(const std::vector<IndexPair>& edges, SpaceRef space) {
  std::vector<IndexSet> n(space->size());
  for (auto [u, v] : edges) {
    require_in_range(space, u);
    require_in_range(space, v);
    n[u].insert(v);
    n[v].insert(u);
  }
  return AdditiveClosure(std::move(space), std::move(n));
}

}  // namespace vrhom
