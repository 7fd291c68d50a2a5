#pragma once

#include <optional>
#include <vector>

#include "vrhom/algebra/matrix.hpp"
#include "vrhom/algebra/sparse.hpp"
#include "vrhom/complex.hpp"

namespace vrhom {

/// Integer chain complex of a pair (K, L): C_k has one basis element per
/// k-simplex of K not in L, ordered lexicographically. With L empty this is the
/// absolute chain complex. Orientation is the increasing vertex order.
class ChainComplex {
 public:
  using Column = std::vector<std::pair<std::size_t, int>>;

  explicit ChainComplex(const SimplicialComplex& total, const SimplicialComplex* sub = nullptr)
      : total_(&total), top_(total.max_dim()) {
    basis_.resize(top_ + 1);
    position_.resize(top_ + 1);
    for (std::size_t k = 0; k <= top_; ++k) {
      const auto& layer = total.simplices(k);
      position_[k].assign(layer.size(), npos);
      for (std::size_t i = 0; i < layer.size(); ++i) {
        if (sub && sub->contains(layer[i])) continue;
        position_[k][i] = basis_[k].size();
        basis_[k].push_back(i);
      }
    }
    boundary_.resize(top_ + 1);
    for (std::size_t k = 1; k <= top_; ++k) {
      for (std::size_t total_index : basis_[k]) {
        const auto& s = total.simplices(k)[total_index];
        Column col;
        for (std::size_t f = 0; f <= k; ++f) {
          auto face = total.index_of(s.facet(f));
          const std::size_t row = position_[k - 1][*face];
          if (row != npos) col.emplace_back(row, f % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        boundary_[k].push_back(std::move(col));
      }
    }
  }

  explicit ChainComplex(const ComplexPair& pair) : ChainComplex(pair.total(), &pair.sub()) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const SimplicialComplex& total() const noexcept { return *total_; }
  std::size_t top() const noexcept { return top_; }
  std::size_t rank(std::size_t k) const { return k <= top_ ? basis_[k].size() : 0; }

  /// Index into total().simplices(k) of basis element i.
  std::size_t total_index(std::size_t k, std::size_t i) const { return basis_[k][i]; }
  const Simplex& simplex(std::size_t k, std::size_t i) const { return total_->simplices(k)[basis_[k][i]]; }

  /// Basis position of a simplex of total(), or nullopt when it lies in the subcomplex
  /// (or is absent).
  std::optional<std::size_t> position(const Simplex& s) const {
    if (s.dim() > top_) return std::nullopt;
    auto idx = total_->index_of(s);
    if (!idx) return std::nullopt;
    const std::size_t p = position_[s.dim()][*idx];
    if (p == npos) return std::nullopt;
    return p;
  }

  /// ∂_k applied to basis element i, in C_{k-1} coordinates. Empty for k = 0.
  const Column& boundary(std::size_t k, std::size_t i) const {
    static const Column none;
    return k == 0 ? none : boundary_[k][i];
  }

  /// ∂_k as a dense integer matrix (rank(k-1) × rank(k)).
  IntegerMatrix boundary_matrix(std::size_t k) const {
    IntegerMatrix m(k == 0 ? 0 : rank(k - 1), rank(k));
    if (k == 0 || k > top_) return m;
    for (std::size_t j = 0; j < rank(k); ++j)
      for (auto [row, sign] : boundary_[k][j]) m(row, j) = sign;
    return m;
  }

  template <class F>
  SparseVec<F> boundary_vector(const F& field, std::size_t k, std::size_t i) const {
    SparseVec<F> out;
    for (auto [row, sign] : boundary(k, i)) out.emplace_back(row, field.from_int(sign));
    return out;
  }

 private:
  const SimplicialComplex* total_;
  std::size_t top_;
  std::vector<std::vector<std::size_t>> basis_;
  std::vector<std::vector<std::size_t>> position_;
  std::vector<std::vector<Column>> boundary_;
};

/// ∂_0 … ∂_max for a complex; entry k maps C_k to C_{k-1} (∂_0 has no rows).
inline std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& k) {
  ChainComplex chains(k);
  std::vector<IntegerMatrix> out;
  for (std::size_t d = 0; d <= chains.top(); ++d) out.push_back(chains.boundary_matrix(d));
  return out;
}

/// Relative boundary maps on the quotient basis (simplices of total not in sub).
inline std::vector<IntegerMatrix> boundary_matrices(const ComplexPair& pair) {
  ChainComplex chains(pair);
  std::vector<IntegerMatrix> out;
  for (std::size_t d = 0; d <= chains.top(); ++d) out.push_back(chains.boundary_matrix(d));
  return out;
}

}  // namespace vrhom
