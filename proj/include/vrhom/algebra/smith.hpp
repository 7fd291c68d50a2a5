#pragma once

#include <optional>
#include <vector>

#include "vrhom/algebra/matrix.hpp"

namespace vrhom {

/// left * original * right = diag(d), d[i] | d[i+1], d[i] >= 0, left and right unimodular.
struct SNFResult {
  std::vector<BigInt> d;  // min(rows, cols) entries
  IntegerMatrix left;
  IntegerMatrix right;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& v : d) r += v != 0;
    return r;
  }

  /// Invariant factors greater than one.
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> out;
    for (const auto& v : d)
      if (v > 1) out.push_back(v);
    return out;
  }
};

namespace detail {

/// Elementary row/column reduction to Smith form. Row operations are mirrored
/// on `left`, column operations on `right` when tracking is enabled.
class SmithReducer {
 public:
  SmithReducer(IntegerMatrix a, bool track) : a_(std::move(a)), track_(track) {
    if (track_) {
      left_ = IntegerMatrix::identity(a_.rows());
      right_ = IntegerMatrix::identity(a_.cols());
    }
  }

  SNFResult run() {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
      auto pivot = smallest_entry(t, m, t, n);
      if (!pivot) break;
      move_to(t, pivot->first, pivot->second);
      while (!settle(t)) {
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    SNFResult out;
    out.d.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) out.d.push_back(a_(t, t));
    if (track_) {
      out.left = std::move(left_);
      out.right = std::move(right_);
    }
    return out;
  }

 private:
  using Position = std::pair<std::size_t, std::size_t>;

  /// Nonzero entry of least magnitude in the block; stops early at a unit.
  std::optional<Position> smallest_entry(std::size_t r_begin, std::size_t r_end, std::size_t c_begin,
                                         std::size_t c_end) const {
    std::optional<Position> best;
    BigInt best_abs;
    for (std::size_t i = r_begin; i < r_end; ++i) {
      for (std::size_t j = c_begin; j < c_end; ++j) {
        const BigInt& v = a_(i, j);
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (!best || mag < best_abs) {
          best = Position{i, j};
          best_abs = std::move(mag);
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  }

  void move_to(std::size_t t, std::size_t i, std::size_t j) {
    swap_rows(t, i);
    swap_cols(t, j);
  }

  /// One pass of clearing row and column t. Returns true when the pivot is
  /// isolated and divides every entry of the trailing submatrix.
  bool settle(std::size_t t) {
    const std::size_t m = a_.rows();
    const std::size_t n = a_.cols();
    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a_(i, t) == 0) continue;
      add_row_multiple(i, t, -(a_(i, t) / a_(t, t)));
      clean = clean && a_(i, t) == 0;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a_(t, j) == 0) continue;
      add_col_multiple(j, t, -(a_(t, j) / a_(t, t)));
      clean = clean && a_(t, j) == 0;
    }
    if (!clean) {
      // A remainder smaller than the pivot survived; make it the new pivot.
      std::optional<Position> best;
      BigInt best_abs = abs(a_(t, t));
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a_(i, t) != 0 && abs(a_(i, t)) < best_abs) {
          best = Position{i, t};
          best_abs = abs(a_(i, t));
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a_(t, j) != 0 && abs(a_(t, j)) < best_abs) {
          best = Position{t, j};
          best_abs = abs(a_(t, j));
        }
      }
      if (best) move_to(t, best->first, best->second);
      return false;
    }
    for (std::size_t i = t + 1; i < m; ++i) {
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a_(i, j) % a_(t, t) != 0) {
          add_row_multiple(t, i, 1);
          return false;
        }
      }
    }
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    a_.swap_rows(a, b);
    if (track_) left_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    a_.swap_cols(a, b);
    if (track_) right_.swap_cols(a, b);
  }
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
    a_.add_row_multiple(target, source, factor);
    if (track_) left_.add_row_multiple(target, source, factor);
  }
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
    a_.add_col_multiple(target, source, factor);
    if (track_) right_.add_col_multiple(target, source, factor);
  }
  void negate_row(std::size_t i) {
    a_.negate_row(i);
    if (track_) left_.negate_row(i);
  }

  IntegerMatrix a_;
  bool track_;
  IntegerMatrix left_;
  IntegerMatrix right_;
};

}  // namespace detail

/// Smith normal form with unimodular transforms.
inline SNFResult smith_normal_form(const IntegerMatrix& m) { return detail::SmithReducer(m, true).run(); }

/// Invariant factors only; skips the transform bookkeeping.
inline std::vector<BigInt> smith_diagonal(const IntegerMatrix& m) { return detail::SmithReducer(m, false).run().d; }

}  // namespace vrhom
