#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vrhom/algebra/smith.hpp"
#include "vrhom/homology/chain.hpp"

namespace vrhom {

struct ChainTerm {
  Simplex simplex;
  Rational coefficient;
  friend bool operator==(const ChainTerm&, const ChainTerm&) = default;
};

using Chain = std::vector<ChainTerm>;

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, integer coefficients only
  std::vector<Chain> generators;
};

/// Groups in dimensions 0..max_dim of the input complex. When the complex was
/// enumerated only up to its cap, the top group misses boundaries from above
/// and `truncated_dim` names it; its Betti number is then an upper bound.
struct HomologyResult {
  Coefficients coefficients = Coefficients::integers();
  bool reduced = false;
  bool cohomology = false;
  std::vector<HomologyGroup> groups;
  std::optional<std::size_t> truncated_dim;

  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> out;
    for (const auto& g : groups) out.push_back(g.betti);
    return out;
  }

  /// Betti numbers of the groups that are exact (drops a truncated top group).
  std::vector<std::size_t> exact_betti() const {
    auto b = betti();
    if (truncated_dim) b.resize(*truncated_dim);
    return b;
  }

  std::size_t exact_dims() const { return truncated_dim ? *truncated_dim : groups.size(); }

  /// Same Betti numbers and torsion in dimensions < dims.
  bool same_invariants(const HomologyResult& other, std::size_t dims) const {
    for (std::size_t k = 0; k < dims; ++k) {
      const bool mine = k < groups.size();
      const bool theirs = k < other.groups.size();
      if (mine != theirs) return false;
      if (!mine) continue;
      if (groups[k].betti != other.groups[k].betti || groups[k].torsion != other.groups[k].torsion) return false;
    }
    return true;
  }
};

struct HomologyOptions {
  bool reduced = false;
  bool generators = false;
};

/// Basis of H_k over a field: cycle representatives complementing a boundary
/// basis, plus a solver expressing any k-cycle in representative coordinates.
template <class F>
class HomologyBasis {
 public:
  HomologyBasis(const F& field, const ChainComplex& chains, std::size_t k) : solver_(field) {
    const std::size_t n = chains.rank(k);
    if (k + 1 <= chains.top()) {
      offset_ = chains.rank(k + 1);
      for (std::size_t j = 0; j < offset_; ++j) solver_.insert(chains.boundary_vector(field, k + 1, j), j);
    }
    boundary_rank_ = solver_.rank();
    ColumnReducer<F> kernel(field);
    for (std::size_t j = 0; j < n; ++j) {
      auto red = kernel.insert(chains.boundary_vector(field, k, j), j);
      if (!red.residual.empty()) continue;
      SparseVec<F> z{{j, field.one()}};
      z = axpy(field, z, field.neg(field.one()), red.combination);
      if (!solver_.insert(z, offset_ + reps_.size()).residual.empty()) reps_.push_back(std::move(z));
    }
  }

  std::size_t size() const noexcept { return reps_.size(); }
  std::size_t boundary_rank() const noexcept { return boundary_rank_; }
  const std::vector<SparseVec<F>>& representatives() const noexcept { return reps_; }

  /// Coordinates of a k-cycle in the representative basis.
  std::vector<typename F::Element> coordinates(const SparseVec<F>& cycle) const {
    const auto& field = solver_.field();
    auto red = solver_.reduce(cycle);
    if (!red.residual.empty()) throw Error(ErrorKind::invalid_argument, "chain is not a cycle");
    std::vector<typename F::Element> out(reps_.size(), field.zero());
    for (const auto& [id, value] : red.combination)
      if (id >= offset_) out[id - offset_] = value;
    return out;
  }

 private:
  ColumnReducer<F> solver_;
  std::size_t offset_ = 0;
  std::size_t boundary_rank_ = 0;
  std::vector<SparseVec<F>> reps_;
};

namespace detail {

template <class F>
Chain to_chain(const F& field, const ChainComplex& chains, std::size_t k, const SparseVec<F>& v) {
  Chain out;
  for (const auto& [i, value] : v) out.push_back({chains.simplex(k, i), field.to_rational(value)});
  return out;
}

/// Clears denominators so a rational cycle has coprime integer coefficients.
inline Chain integral(Chain c) {
  BigInt lcm = 1;
  for (const auto& t : c) lcm = boost::multiprecision::lcm(lcm, denominator(t.coefficient));
  BigInt g = 0;
  for (auto& t : c) {
    t.coefficient *= lcm;
    g = boost::multiprecision::gcd(g, numerator(t.coefficient));
  }
  if (g > 1)
    for (auto& t : c) t.coefficient /= g;
  return c;
}

template <class F>
HomologyResult field_homology(const F& field, const ChainComplex& chains, const HomologyOptions& opts) {
  HomologyResult result;
  const std::size_t top = chains.top();
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    ColumnReducer<F> reducer(field);
    for (std::size_t j = 0; j < chains.rank(k); ++j) reducer.insert(chains.boundary_vector(field, k, j), j);
    ranks[k] = reducer.rank();
  }
  for (std::size_t k = 0; k <= top; ++k) {
    HomologyGroup g;
    g.betti = chains.rank(k) - ranks[k] - ranks[k + 1];
    if (opts.generators) {
      HomologyBasis<F> basis(field, chains, k);
      for (const auto& rep : basis.representatives()) g.generators.push_back(to_chain(field, chains, k, rep));
    }
    result.groups.push_back(std::move(g));
  }
  return result;
}

inline HomologyResult integer_homology(const ChainComplex& chains, const HomologyOptions& opts) {
  HomologyResult result;
  const std::size_t top = chains.top();
  std::vector<std::size_t> ranks(top + 2, 0);
  std::vector<std::vector<BigInt>> torsion(top + 2);
  for (std::size_t k = 1; k <= top; ++k) {
    auto d = smith_diagonal(chains.boundary_matrix(k));
    for (const auto& v : d) {
      if (v != 0) ++ranks[k];
      if (v > 1) torsion[k - 1].push_back(v);
    }
  }
  for (std::size_t k = 0; k <= top; ++k) {
    HomologyGroup g;
    g.betti = chains.rank(k) - ranks[k] - ranks[k + 1];
    g.torsion = torsion[k];
    result.groups.push_back(std::move(g));
  }
  if (opts.generators) {
    // Free-part representatives: a rational basis of H_k, scaled to integral cycles.
    auto rational = field_homology(RationalField{}, chains, opts);
    for (std::size_t k = 0; k <= top; ++k)
      for (auto& c : rational.groups[k].generators) result.groups[k].generators.push_back(integral(std::move(c)));
  }
  return result;
}

inline HomologyResult compute_homology(const ChainComplex& chains, bool exhausted, bool absolute_nonempty,
                                       const Coefficients& coeffs, const HomologyOptions& opts) {
  HomologyResult result = coeffs.is_field()
                              ? visit_field(coeffs, [&](const auto& f) { return field_homology(f, chains, opts); })
                              : integer_homology(chains, opts);
  result.coefficients = coeffs;
  result.reduced = opts.reduced;
  if (!exhausted) result.truncated_dim = chains.top();
  if (opts.reduced && absolute_nonempty && !result.groups.empty()) result.groups[0].betti -= 1;
  return result;
}

}  // namespace detail

/// Homology of a pair (K, L); with an empty L this is absolute homology.
/// Reduced homology lowers β₀ by one for non-empty absolute complexes.
inline HomologyResult homology(const ComplexPair& pair, const Coefficients& coeffs, const HomologyOptions& opts = {}) {
  ChainComplex chains(pair);
  const bool absolute_nonempty = pair.sub().empty() && !pair.total().empty();
  return detail::compute_homology(chains, pair.total().exhausted(), absolute_nonempty, coeffs, opts);
}

inline HomologyResult homology(const SimplicialComplex& k, const Coefficients& coeffs, const HomologyOptions& opts = {}) {
  ChainComplex chains(k);
  return detail::compute_homology(chains, k.exhausted(), !k.empty(), coeffs, opts);
}

namespace detail {

/// Ranks of the coboundaries δ^k = ∂_{k+1}ᵀ, computed on explicit transposes.
template <class F>
HomologyResult field_cohomology(const F& field, const ChainComplex& chains) {
  const std::size_t top = chains.top();
  std::vector<std::size_t> cob_rank(top + 1, 0);  // rank δ^k for k < top
  for (std::size_t k = 0; k < top; ++k) {
    std::vector<SparseVec<F>> rows(chains.rank(k));
    for (std::size_t j = 0; j < chains.rank(k + 1); ++j)
      for (auto [row, sign] : chains.boundary(k + 1, j)) rows[row].emplace_back(j, field.from_int(sign));
    ColumnReducer<F> reducer(field);
    for (std::size_t i = 0; i < rows.size(); ++i) reducer.insert(rows[i], i);
    cob_rank[k] = reducer.rank();
  }
  HomologyResult result;
  result.cohomology = true;
  for (std::size_t k = 0; k <= top; ++k) {
    HomologyGroup g;
    g.betti = chains.rank(k) - cob_rank[k] - (k > 0 ? cob_rank[k - 1] : 0);
    result.groups.push_back(std::move(g));
  }
  return result;
}

inline HomologyResult compute_cohomology(const ChainComplex& chains, bool exhausted, bool absolute_nonempty,
                                         const Coefficients& coeffs, bool reduced) {
  if (!coeffs.is_field()) {
    throw Error(ErrorKind::unsupported_coefficients, "cohomology is available over fields only (q or zp:P)");
  }
  auto result = visit_field(coeffs, [&](const auto& f) { return field_cohomology(f, chains); });
  result.coefficients = coeffs;
  result.reduced = reduced;
  if (!exhausted) result.truncated_dim = chains.top();
  if (reduced && absolute_nonempty && !result.groups.empty()) result.groups[0].betti -= 1;
  return result;
}

}  // namespace detail

/// Cohomology of a pair over a field.
inline HomologyResult cohomology(const ComplexPair& pair, const Coefficients& coeffs, bool reduced = false) {
  ChainComplex chains(pair);
  const bool absolute_nonempty = pair.sub().empty() && !pair.total().empty();
  return detail::compute_cohomology(chains, pair.total().exhausted(), absolute_nonempty, coeffs, reduced);
}

inline HomologyResult cohomology(const SimplicialComplex& k, const Coefficients& coeffs, bool reduced = false) {
  ChainComplex chains(k);
  return detail::compute_cohomology(chains, k.exhausted(), !k.empty(), coeffs, reduced);
}

}  // namespace vrhom
