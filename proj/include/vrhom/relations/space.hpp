#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vrhom/error.hpp"

namespace vrhom {

using Index = std::size_t;
using IndexSet = std::set<Index>;
using IndexPair = std::pair<Index, Index>;

/// A vertex function between finite spaces: entry i is the image of point i.
using VertexMap = std::vector<Index>;

/// Finite, index-based point set. Labels are display-only and pairwise distinct.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    lookup_.reserve(labels_.size());
    for (Index i = 0; i < labels_.size(); ++i) {
      if (!lookup_.emplace(labels_[i], i).second) {
        throw Error(ErrorKind::duplicate_label, "label '" + labels_[i] + "' appears twice");
      }
    }
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Index> find(const std::string& label) const {
    auto it = lookup_.find(label);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  Index index_of(const std::string& label) const {
    auto found = find(label);
    if (!found) throw Error(ErrorKind::unknown_label, "no point labelled '" + label + "'");
    return *found;
  }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> lookup_;
};

using SpaceRef = std::shared_ptr<const FiniteSpace>;

inline SpaceRef make_space(std::vector<std::string> labels) {
  return std::make_shared<const FiniteSpace>(std::move(labels));
}

/// Space with labels "0", "1", ..., "n-1".
inline SpaceRef make_space(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_space(std::move(labels));
}

inline bool same_space(const SpaceRef& a, const SpaceRef& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_space(const SpaceRef& a, const SpaceRef& b, const char* what) {
  if (!same_space(a, b)) throw Error(ErrorKind::space_mismatch, what);
}

inline void require_in_range(const SpaceRef& space, Index i) {
  if (i >= space->size()) {
    throw Error(ErrorKind::index_out_of_range,
                "index " + std::to_string(i) + " >= " + std::to_string(space->size()));
  }
}

inline void require_in_range(const SpaceRef& space, const IndexSet& set) {
  for (Index i : set) require_in_range(space, i);
}

inline IndexSet all_points(const SpaceRef& space) {
  IndexSet out;
  for (Index i = 0; i < space->size(); ++i) out.insert(out.end(), i);
  return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  for (Index i : a)
    if (!b.contains(i)) out.insert(out.end(), i);
  return out;
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  for (Index i : a)
    if (!b.contains(i)) return false;
  return true;
}

/// Subspace with the labels of `points`, in increasing index order.
inline SpaceRef subspace(const SpaceRef& space, const IndexSet& points) {
  require_in_range(space, points);
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (Index i : points) labels.push_back(space->label(i));
  return make_space(std::move(labels));
}

/// Cartesian product with row-major indexing: (x, y) has index x * |Y| + y.
inline SpaceRef product_space(const SpaceRef& x, const SpaceRef& y) {
  std::vector<std::string> labels;
  labels.reserve(x->size() * y->size());
  for (Index i = 0; i < x->size(); ++i)
    for (Index j = 0; j < y->size(); ++j)
      labels.push_back("(" + x->label(i) + "," + y->label(j) + ")");
  return make_space(std::move(labels));
}

inline void require_vertex_map(const VertexMap& f, const SpaceRef& domain, const SpaceRef& codomain) {
  if (f.size() != domain->size()) {
    throw Error(ErrorKind::invalid_argument, "vertex map has " + std::to_string(f.size()) +
                                                 " entries, domain has " +
                                                 std::to_string(domain->size()) + " points");
  }
  for (Index image : f) require_in_range(codomain, image);
}

}  // namespace vrhom
