#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "vrhom/complex/simplex.hpp"

namespace vrhom {

/// Finite simplicial complex enumerated up to `max_dim`. Layers are sorted
/// lexicographically and face-closed. `exhausted()` reports whether the
/// underlying complex has no simplices above the cap, i.e. whether the
/// enumeration is complete.
///
/// Computing H_k requires simplices of dimension k + 1: request max_dim >= k + 1.
class SimplicialComplex {
 public:
  SimplicialComplex(SpaceRef space, std::vector<std::vector<Simplex>> layers, std::size_t max_dim, bool exhausted)
      : space_(std::move(space)), layers_(std::move(layers)), max_dim_(max_dim), exhausted_(exhausted) {
    if (layers_.size() > max_dim_ + 1) {
      throw Error(ErrorKind::invalid_argument, "complex has layers above its dimension cap");
    }
    layers_.resize(max_dim_ + 1);
    for (std::size_t k = 0; k < layers_.size(); ++k) {
      auto& layer = layers_[k];
      std::sort(layer.begin(), layer.end());
      layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
      for (const auto& s : layer) {
        if (s.dim() != k) throw Error(ErrorKind::invalid_argument, "simplex stored in the wrong layer");
        for (Index v : s.vertices()) require_in_range(space_, v);
      }
    }
    for (std::size_t k = 1; k < layers_.size(); ++k) {
      for (const auto& s : layers_[k]) {
        for (std::size_t f = 0; f <= k; ++f) {
          if (!contains(s.facet(f))) {
            throw Error(ErrorKind::invalid_argument, "complex is not face-closed at " + s.to_string());
          }
        }
      }
    }
  }

  /// Empty complex on `space`.
  SimplicialComplex(SpaceRef space, std::size_t max_dim) : SimplicialComplex(std::move(space), {}, max_dim, true) {}

  /// Complex generated by `maximal` simplices: all their faces up to `max_dim`
  /// (default: the largest simplex dimension).
  static SimplicialComplex from_maximal(SpaceRef space, const std::vector<Simplex>& maximal,
                                        std::optional<std::size_t> max_dim = std::nullopt) {
    std::size_t top = 0;
    for (const auto& s : maximal) top = std::max(top, s.dim());
    const std::size_t cap = max_dim.value_or(top);
    std::vector<std::set<Simplex>> layers(cap + 1);
    for (const auto& s : maximal) {
      const std::size_t n = s.size();
      // Faces as bitmasks over the simplex's vertices; maximal simplices are small.
      if (n > 24) throw Error(ErrorKind::invalid_argument, "maximal simplex too large to expand");
      for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        const auto count = static_cast<std::size_t>(__builtin_popcountl(mask));
        if (count > cap + 1) continue;
        std::vector<Index> face;
        face.reserve(count);
        for (std::size_t k = 0; k < n; ++k)
          if (mask & (1ul << k)) face.push_back(s[k]);
        layers[count - 1].insert(Simplex(std::move(face)));
      }
    }
    std::vector<std::vector<Simplex>> out;
    for (auto& layer : layers) out.emplace_back(layer.begin(), layer.end());
    return SimplicialComplex(std::move(space), std::move(out), cap, top <= cap);
  }

  const SpaceRef& space() const noexcept { return space_; }
  std::size_t max_dim() const noexcept { return max_dim_; }
  bool exhausted() const noexcept { return exhausted_; }

  const std::vector<Simplex>& simplices(std::size_t dim) const {
    static const std::vector<Simplex> none;
    return dim < layers_.size() ? layers_[dim] : none;
  }

  std::size_t count(std::size_t dim) const { return simplices(dim).size(); }

  std::size_t total_count() const {
    std::size_t n = 0;
    for (const auto& layer : layers_) n += layer.size();
    return n;
  }

  bool empty() const { return layers_[0].empty(); }

  /// Highest non-empty dimension; nullopt for the empty complex.
  std::optional<std::size_t> top_dim() const {
    for (std::size_t k = layers_.size(); k-- > 0;)
      if (!layers_[k].empty()) return k;
    return std::nullopt;
  }

  std::optional<std::size_t> index_of(const Simplex& s) const {
    const auto& layer = simplices(s.dim());
    auto it = std::lower_bound(layer.begin(), layer.end(), s);
    if (it == layer.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - layer.begin());
  }

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  std::vector<Index> vertices() const {
    std::vector<Index> out;
    for (const auto& s : layers_[0]) out.push_back(s[0]);
    return out;
  }

  /// Simplices that are not a facet of any stored simplex.
  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (std::size_t k = 0; k < layers_.size(); ++k) {
      std::set<Simplex> covered;
      if (k + 1 < layers_.size()) {
        for (const auto& s : layers_[k + 1])
          for (std::size_t f = 0; f <= k + 1; ++f) covered.insert(s.facet(f));
      }
      for (const auto& s : layers_[k])
        if (!covered.contains(s)) out.push_back(s);
    }
    return out;
  }

  bool is_subcomplex_of(const SimplicialComplex& other) const {
    if (!same_space(space_, other.space_)) return false;
    for (const auto& layer : layers_)
      for (const auto& s : layer)
        if (!other.contains(s)) return false;
    return true;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return same_space(a.space_, b.space_) && a.layers_ == b.layers_;
  }

 private:
  SpaceRef space_;
  std::vector<std::vector<Simplex>> layers_;
  std::size_t max_dim_;
  bool exhausted_;
};

using ComplexRef = std::shared_ptr<const SimplicialComplex>;

inline ComplexRef share(SimplicialComplex complex) {
  return std::make_shared<const SimplicialComplex>(std::move(complex));
}

/// (total, sub) with sub a subcomplex of total.
class ComplexPair {
 public:
  ComplexPair(ComplexRef total, ComplexRef sub) : total_(std::move(total)), sub_(std::move(sub)) {
    if (!sub_->is_subcomplex_of(*total_)) {
      throw Error(ErrorKind::invalid_argument, "second complex of a pair must be a subcomplex of the first");
    }
  }

  /// (K, ∅).
  explicit ComplexPair(ComplexRef total)
      : total_(total), sub_(share(SimplicialComplex(total->space(), total->max_dim()))) {}

  const SimplicialComplex& total() const noexcept { return *total_; }
  const SimplicialComplex& sub() const noexcept { return *sub_; }
  const ComplexRef& total_ref() const noexcept { return total_; }
  const ComplexRef& sub_ref() const noexcept { return sub_; }

 private:
  ComplexRef total_;
  ComplexRef sub_;
};

}  // namespace vrhom
