#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vrhom/relations/metric.hpp"

namespace vrhom {

/// Finite base of a semi-uniform structure. Members contain the diagonal, the
/// family is closed under pairwise intersection (closed at construction), and
/// every inverse U⁻¹ contains some member.
class SemiUniformBase {
 public:
  SemiUniformBase(SpaceRef space, std::vector<Relation> members) : space_(std::move(space)) {
    if (members.empty()) throw Error(ErrorKind::invalid_argument, "a base needs at least one member");
    for (const auto& m : members) {
      require_same_space(space_, m.space(), "base member on a different space");
      add_unique(m);
    }
    for (std::size_t i = 0; i < members_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) add_unique(relation_intersect(members_[i], members_[j]));
    }
    for (const auto& m : members_) {
      const Relation inverse = relation_inverse(m);
      bool ok = false;
      for (const auto& other : members_) ok = ok || other.is_subset_of(inverse);
      if (!ok) throw Error(ErrorKind::invalid_argument, "inverse of a member contains no member");
    }
  }

  static SemiUniformBase single(Relation member) {
    SpaceRef space = member.space();
    return SemiUniformBase(std::move(space), {std::move(member)});
  }

  const SpaceRef& space() const noexcept { return space_; }
  const std::vector<Relation>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const Relation& operator[](std::size_t i) const { return members_.at(i); }

  /// Index of the member contained in every other member, if one exists.
  std::optional<std::size_t> minimum() const {
    for (std::size_t i = 0; i < members_.size(); ++i) {
      bool below_all = true;
      for (const auto& other : members_) below_all = below_all && members_[i].is_subset_of(other);
      if (below_all) return i;
    }
    return std::nullopt;
  }

 private:
  void add_unique(const Relation& r) {
    for (const auto& m : members_)
      if (m == r) return;
    members_.push_back(r);
  }

  SpaceRef space_;
  std::vector<Relation> members_;
};

/// Members {d < q + δ} ∪ Δ for each δ. For small enough δ the member equals
/// the closed relation {d <= q}.
inline SemiUniformBase scale_base(const SemiPseudometric& d, double q, const std::vector<double>& deltas) {
  require_non_negative(q, "scale");
  if (deltas.empty()) throw Error(ErrorKind::invalid_argument, "scale base needs at least one delta");
  std::vector<Relation> members;
  for (double delta : deltas) {
    if (!(delta > 0.0)) throw Error(ErrorKind::invalid_argument, "deltas must be strictly positive");
    members.push_back(metric_relation(d, q + delta, ScaleMode::strict));
  }
  return SemiUniformBase(d.space(), std::move(members));
}

struct ContinuityWitness {
  std::size_t source_member;  // member U of the domain base
  IndexPair pair;             // (i, j) ∈ U with (f(i), f(j)) ∉ V
};

struct ContinuityVerdict {
  bool continuous = true;
  std::optional<std::size_t> failing_target;  // member V of the codomain base
  std::vector<ContinuityWitness> witnesses;   // one per domain member when failing
};

/// f is uniformly continuous iff every codomain member V has a domain member U
/// with f(U) ⊆ V.
inline ContinuityVerdict check_uniform_continuity(const VertexMap& f, const SemiUniformBase& bx,
                                                  const SemiUniformBase& by) {
  require_vertex_map(f, bx.space(), by.space());
  ContinuityVerdict verdict;
  for (std::size_t v = 0; v < by.size(); ++v) {
    const Relation& target = by[v];
    std::vector<ContinuityWitness> failures;
    bool found = false;
    for (std::size_t u = 0; u < bx.size() && !found; ++u) {
      std::optional<IndexPair> bad;
      for (auto [i, j] : bx[u].pairs()) {
        if (!target.contains(f[i], f[j])) {
          bad = IndexPair{i, j};
          break;
        }
      }
      if (bad) {
        failures.push_back({u, *bad});
      } else {
        found = true;
      }
    }
    if (!found) {
      verdict.continuous = false;
      verdict.failing_target = v;
      verdict.witnesses = std::move(failures);
      return verdict;
    }
  }
  return verdict;
}

struct PqVerdict {
  bool continuous = true;
  std::optional<IndexPair> witness;  // d_X <= p but d_Y(f i, f j) > q
};

/// (p, q)-continuity on finite spaces: d_X(x, y) <= p implies d_Y(f x, f y) <= q.
/// On finite inputs the epsilon-delta quantifiers collapse to this check.
inline PqVerdict check_pq_continuity(const VertexMap& f, const SemiPseudometric& dx, const SemiPseudometric& dy,
                                     double p, double q) {
  require_non_negative(p, "p");
  require_non_negative(q, "q");
  require_vertex_map(f, dx.space(), dy.space());
  for (Index i = 0; i < dx.size(); ++i) {
    for (Index j = 0; j < dx.size(); ++j) {
      if (dx(i, j) <= p && dy(f[i], f[j]) > q) return {false, IndexPair{i, j}};
    }
  }
  return {};
}

}  // namespace vrhom
