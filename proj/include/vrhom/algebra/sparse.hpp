#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "vrhom/algebra/field.hpp"

namespace vrhom {

/// Sparse vector over a field: (index, value) pairs, indices increasing, values nonzero.
template <class F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::Element>>;

/// x + factor * y.
template <class F>
SparseVec<F> axpy(const F& field, const SparseVec<F>& x, const typename F::Element& factor, const SparseVec<F>& y) {
  SparseVec<F> out;
  out.reserve(x.size() + y.size());
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() || b != y.end()) {
    if (b == y.end() || (a != x.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == x.end() || b->first < a->first) {
      auto v = field.mul(factor, b->second);
      if (!field.is_zero(v)) out.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      auto v = field.add(a->second, field.mul(factor, b->second));
      if (!field.is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

/// Incremental column reduction with tracked combinations. Each stored column
/// has a distinct lowest index (pivot) and remembers how it was formed from
/// the inserted originals, identified by caller-chosen ids.
template <class F>
class ColumnReducer {
 public:
  struct Reduction {
    SparseVec<F> residual;     // v − Σ combination[id] · original[id]
    SparseVec<F> combination;  // indexed by original id
  };

  explicit ColumnReducer(F field) : field_(std::move(field)) {}

  Reduction reduce(SparseVec<F> v) const {
    SparseVec<F> acc;
    while (!v.empty()) {
      auto it = pivots_.find(v.back().first);
      if (it == pivots_.end()) break;
      const auto& stored = columns_[it->second];
      const auto factor = field_.div(v.back().second, stored.reduced.back().second);
      v = axpy(field_, v, field_.neg(factor), stored.reduced);
      acc = axpy(field_, acc, factor, stored.combination);
    }
    return {std::move(v), std::move(acc)};
  }

  /// Reduces `original` and stores it when independent of earlier insertions.
  /// Returns the reduction either way; residual is empty iff dependent.
  Reduction insert(const SparseVec<F>& original, std::size_t id) {
    auto red = reduce(original);
    if (!red.residual.empty()) {
      SparseVec<F> self{{id, field_.one()}};
      Stored stored{red.residual, axpy(field_, self, field_.neg(field_.one()), red.combination)};
      pivots_.emplace(stored.reduced.back().first, columns_.size());
      columns_.push_back(std::move(stored));
    }
    return red;
  }

  std::size_t rank() const noexcept { return columns_.size(); }
  const F& field() const noexcept { return field_; }

 private:
  struct Stored {
    SparseVec<F> reduced;
    SparseVec<F> combination;
  };

  F field_;
  std::vector<Stored> columns_;
  std::unordered_map<std::size_t, std::size_t> pivots_;
};

/// Rank of a dense matrix over a field.
template <class F>
std::size_t field_rank(const F& field, const Matrix<typename F::Element>& m) {
  ColumnReducer<F> reducer(field);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVec<F> col;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!field.is_zero(m(i, j))) col.emplace_back(i, m(i, j));
    reducer.insert(col, j);
  }
  return reducer.rank();
}

/// Product of dense matrices with field arithmetic.
template <class F>
Matrix<typename F::Element> field_multiply(const F& field, const Matrix<typename F::Element>& a,
                                           const Matrix<typename F::Element>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::invalid_argument, "matrix product dimension mismatch");
  Matrix<typename F::Element> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = field.add(c(i, j), field.mul(a(i, k), b(k, j)));
    }
  return c;
}

}  // namespace vrhom
