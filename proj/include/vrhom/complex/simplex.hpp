#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "vrhom/relations/space.hpp"

namespace vrhom {

/// A simplex as a strictly increasing vertex list. The induced orientation is
/// the increasing one.
class Simplex {
 public:
  Simplex(std::initializer_list<Index> vertices) : Simplex(std::vector<Index>(vertices)) {}

  explicit Simplex(std::vector<Index> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw Error(ErrorKind::invalid_argument, "a simplex needs at least one vertex");
    for (std::size_t k = 1; k < v_.size(); ++k) {
      if (v_[k - 1] >= v_[k]) throw Error(ErrorKind::invalid_argument, "simplex vertices must increase strictly");
    }
  }

  /// Sorts and deduplicates arbitrary vertex lists (set image).
  static Simplex from_unsorted(std::vector<Index> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return Simplex(std::move(vertices));
  }

  std::size_t dim() const noexcept { return v_.size() - 1; }
  std::size_t size() const noexcept { return v_.size(); }
  const std::vector<Index>& vertices() const noexcept { return v_; }
  Index operator[](std::size_t k) const { return v_[k]; }
  Index back() const { return v_.back(); }

  /// Facet opposite vertex k; requires dim() >= 1.
  Simplex facet(std::size_t k) const {
    std::vector<Index> out;
    out.reserve(v_.size() - 1);
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (i != k) out.push_back(v_[i]);
    return Simplex(std::move(out), Trusted{});
  }

  Simplex with_vertex(Index w) const {
    std::vector<Index> out(v_);
    out.insert(std::upper_bound(out.begin(), out.end(), w), w);
    return Simplex(std::move(out));
  }

  bool contains(Index w) const { return std::binary_search(v_.begin(), v_.end(), w); }

  bool is_face_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
  }

  std::string to_string(const FiniteSpace* space = nullptr) const {
    std::string out = "{";
    for (std::size_t k = 0; k < v_.size(); ++k) {
      if (k) out += ",";
      out += space ? space->label(v_[k]) : std::to_string(v_[k]);
    }
    return out + "}";
  }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  /// Orders by dimension, then lexicographically.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  struct Trusted {};
  Simplex(std::vector<Index> vertices, Trusted) : v_(std::move(vertices)) {}

  std::vector<Index> v_;
};

}  // namespace vrhom
