#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "vrhom/relations/relation.hpp"

namespace vrhom {

/// Symmetric, non-negative distance table with zero diagonal. The triangle
/// inequality is not required and distinct points may be at distance zero.
class SemiPseudometric {
 public:
  /// `table` is row-major, size n*n.
  SemiPseudometric(SpaceRef space, std::vector<double> table)
      : space_(std::move(space)), dist_(std::move(table)) {
    const std::size_t n = space_->size();
    if (dist_.size() != n * n) {
      throw Error(ErrorKind::invalid_argument, "distance table has " + std::to_string(dist_.size()) +
                                                   " entries, expected " + std::to_string(n * n));
    }
    for (Index i = 0; i < n; ++i) {
      if (dist_[i * n + i] != 0.0) {
        throw Error(ErrorKind::nonzero_diagonal, "d(" + space_->label(i) + ", " + space_->label(i) + ") != 0");
      }
      for (Index j = 0; j < n; ++j) {
        const double v = dist_[i * n + j];
        if (!(v >= 0.0) || std::isinf(v)) {
          throw Error(ErrorKind::negative_distance,
                      "d(" + space_->label(i) + ", " + space_->label(j) + ") is not a finite non-negative value");
        }
        if (v != dist_[j * n + i]) {
          throw Error(ErrorKind::asymmetric_matrix,
                      "d(" + space_->label(i) + ", " + space_->label(j) + ") != d(" + space_->label(j) + ", " +
                          space_->label(i) + ")");
        }
      }
    }
  }

  /// Euclidean distances between coordinate tuples of equal length.
  static SemiPseudometric euclidean(SpaceRef space, const std::vector<std::vector<double>>& coords) {
    const std::size_t n = space->size();
    if (coords.size() != n) throw Error(ErrorKind::invalid_argument, "one coordinate tuple per point required");
    std::vector<double> table(n * n, 0.0);
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t c = 0; c < coords[i].size(); ++c) {
          const double diff = coords[i][c] - coords[j].at(c);
          sum += diff * diff;
        }
        table[i * n + j] = table[j * n + i] = std::sqrt(sum);
      }
    }
    return SemiPseudometric(std::move(space), std::move(table));
  }

  const SpaceRef& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_->size(); }
  double operator()(Index i, Index j) const { return dist_[i * size() + j]; }
  const std::vector<double>& table() const noexcept { return dist_; }

  /// Sorted distinct off-diagonal distances.
  std::vector<double> distance_values() const {
    std::vector<double> values;
    for (Index i = 0; i < size(); ++i)
      for (Index j = i + 1; j < size(); ++j) values.push_back((*this)(i, j));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  }

  double diameter() const {
    auto values = distance_values();
    return values.empty() ? 0.0 : values.back();
  }

  friend bool operator==(const SemiPseudometric& a, const SemiPseudometric& b) {
    return same_space(a.space_, b.space_) && a.dist_ == b.dist_;
  }

 private:
  SpaceRef space_;
  std::vector<double> dist_;
};

enum class ScaleMode { strict, closed };

inline void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0)) throw Error(ErrorKind::invalid_argument, std::string(name) + " must be >= 0");
}

/// strict: {d < q} ∪ Δ. closed: {d <= q} ∪ Δ. Values are compared exactly.
inline Relation metric_relation(const SemiPseudometric& d, double q, ScaleMode mode) {
  require_non_negative(q, "scale");
  if (mode == ScaleMode::strict) {
    return Relation::from_predicate(d.space(), [&](Index i, Index j) { return d(i, j) < q; });
  }
  return Relation::from_predicate(d.space(), [&](Index i, Index j) { return d(i, j) <= q; });
}

/// d_q(x, y) = d(x, y) - q when d(x, y) > q, else 0.
inline SemiPseudometric shifted_metric(const SemiPseudometric& d, double q) {
  require_non_negative(q, "scale");
  std::vector<double> table(d.table());
  for (double& v : table) v = v > q ? v - q : 0.0;
  return SemiPseudometric(d.space(), std::move(table));
}

/// d_{<=q}(x, y) = d(x, y) when d(x, y) > q, else 0.
inline SemiPseudometric closed_metric(const SemiPseudometric& d, double q) {
  require_non_negative(q, "scale");
  std::vector<double> table(d.table());
  for (double& v : table) v = v > q ? v : 0.0;
  return SemiPseudometric(d.space(), std::move(table));
}

/// Smallest positive gap between consecutive values of the distance set
/// together with the `extra` values; nullopt when fewer than two distinct values.
inline std::optional<double> smallest_gap(const SemiPseudometric& d, const std::vector<double>& extra = {}) {
  auto values = d.distance_values();
  values.push_back(0.0);
  values.insert(values.end(), extra.begin(), extra.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::optional<double> gap;
  for (std::size_t k = 1; k < values.size(); ++k) {
    const double g = values[k] - values[k - 1];
    if (!gap || g < *gap) gap = g;
  }
  return gap;
}

}  // namespace vrhom
