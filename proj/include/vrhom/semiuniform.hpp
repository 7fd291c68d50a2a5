#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "vrhom/closure.hpp"
#include "vrhom/complex.hpp"
#include "vrhom/homology.hpp"
#include "vrhom/relations.hpp"

namespace vrhom {

struct StabilizationEntry {
  std::size_t member = 0;
  bool equals_minimum = false;
  /// Whether the inclusion Σ_min → Σ_member induces isomorphisms in every exact
  /// dimension; only evaluated over fields.
  std::optional<bool> isomorphic;
};

/// Limit of (co)homology over a finite base. With a ⊆-minimum member the
/// inverse and direct systems are eventually constant, so both limits are the
/// groups at that member.
struct LimitReport {
  std::size_t member_count = 0;
  std::vector<std::vector<bool>> inclusion;  // inclusion[i][j]: member i ⊆ member j
  std::optional<std::size_t> minimum;
  std::optional<HomologyResult> homology;
  std::optional<HomologyResult> cohomology;  // field coefficients only
  std::vector<StabilizationEntry> stabilization;
};

struct AxiomVerdict {
  AxiomVerdict() = default;
  AxiomVerdict(std::string axiom_name, std::string instance_text)
      : axiom(std::move(axiom_name)), instance(std::move(instance_text)) {}

  std::string axiom;
  std::string instance;
  bool pass = true;
  std::vector<std::string> witness;  // non-empty on failure
  std::vector<std::string> notes;

  void fail(std::string why) {
    pass = false;
    witness.push_back(std::move(why));
  }
};

namespace detail {

inline std::string betti_string(const std::vector<std::size_t>& b) {
  std::string out = "(";
  for (std::size_t k = 0; k < b.size(); ++k) out += (k ? "," : "") + std::to_string(b[k]);
  return out + ")";
}

inline std::string set_string(const SpaceRef& space, const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Index i : s) {
    out += (first ? "" : ",") + space->label(i);
    first = false;
  }
  return out + "}";
}

inline std::string number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::vector<std::size_t> prefix(std::vector<std::size_t> v, std::size_t n) {
  if (v.size() > n) v.resize(n);
  return v;
}

/// (Σ^X_U, Σ^A_{U_A}), allowing an empty A.
inline ComplexPair pair_or_absolute(const Relation& u, const IndexSet& a, std::size_t max_dim) {
  if (a.empty()) return ComplexPair(share(clique_complex(u, max_dim)));
  return pair_complex(u, a, max_dim);
}

inline bool all_isomorphisms(const InducedMapResult& m) {
  return visit_field(m.coefficients, [&](const auto& field) {
    for (const auto& mat : m.maps) {
      if (mat.rows() != mat.cols()) return false;
      if (field_rank(field, from_rational_matrix(field, mat)) != mat.rows()) return false;
    }
    return true;
  });
}

}  // namespace detail

/// Homology (and, over fields, cohomology) of the pair (X, A) over a base with
/// a ⊆-minimum member; throws ErrorKind::no_minimum otherwise.
inline LimitReport limit_homology(const SemiUniformBase& base, const std::optional<IndexSet>& a,
                                  const Coefficients& coeffs, std::size_t max_dim) {
  LimitReport report;
  report.member_count = base.size();
  for (const auto& u : base.members()) {
    std::vector<bool> row;
    for (const auto& v : base.members()) row.push_back(u.is_subset_of(v));
    report.inclusion.push_back(std::move(row));
  }
  report.minimum = base.minimum();
  if (!report.minimum) {
    throw Error(ErrorKind::no_minimum, "base has no ⊆-minimum member; limit not evaluated");
  }
  const IndexSet subset = a.value_or(IndexSet{});
  require_in_range(base.space(), subset);
  // A minimum member U satisfies U ⊆ U⁻¹ by the inverse axiom, hence is symmetric.
  const Relation& umin = base[*report.minimum];
  const ComplexPair lowest = detail::pair_or_absolute(umin, subset, max_dim);
  report.homology = homology(lowest, coeffs);
  if (coeffs.is_field()) report.cohomology = cohomology(lowest, coeffs);

  for (std::size_t m = 0; m < base.size(); ++m) {
    if (m == *report.minimum) continue;
    StabilizationEntry entry;
    entry.member = m;
    entry.equals_minimum = base[m] == umin;
    if (coeffs.is_field()) {
      const ComplexPair upper = detail::pair_or_absolute(symmetric_part(base[m]), subset, max_dim);
      VertexMap id(base.space()->size());
      for (Index v = 0; v < id.size(); ++v) id[v] = v;
      entry.isomorphic = detail::all_isomorphisms(induced_map(PairMap(lowest, upper, id), coeffs));
    }
    report.stabilization.push_back(entry);
  }
  return report;
}

/// One-point space with base {Δ}: H_0 = G, higher groups vanish, no torsion,
/// for homology and cohomology.
inline AxiomVerdict verify_dimension(const Coefficients& coeffs, std::size_t max_dim = 3) {
  AxiomVerdict verdict{"dimension", "one-point space, base {Δ}, coefficients " + coeffs.to_string()};
  auto point = make_space(std::vector<std::string>{"p"});
  const auto base = SemiUniformBase::single(Relation::diagonal(point));
  const auto report = limit_homology(base, std::nullopt, coeffs, max_dim);
  const auto& h = *report.homology;
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    const std::size_t expected = k == 0 ? 1 : 0;
    if (h.groups[k].betti != expected || !h.groups[k].torsion.empty()) {
      verdict.fail("H_" + std::to_string(k) + " has rank " + std::to_string(h.groups[k].betti));
    }
  }
  const Coefficients cohomology_coeffs = coeffs.is_field() ? coeffs : Coefficients::rationals();
  if (!coeffs.is_field()) verdict.notes.push_back("cohomology checked over q (integer cohomology not computed)");
  const auto co = cohomology(SimplicialComplex::from_maximal(point, {Simplex{0}}, max_dim), cohomology_coeffs);
  for (std::size_t k = 0; k < co.groups.size(); ++k) {
    const std::size_t expected = k == 0 ? 1 : 0;
    if (co.groups[k].betti != expected) {
      verdict.fail("H^" + std::to_string(k) + " has rank " + std::to_string(co.groups[k].betti));
    }
  }
  verdict.notes.push_back("betti " + detail::betti_string(h.betti()));
  return verdict;
}

struct ExcisionHypothesis {
  bool holds = false;
  std::optional<std::size_t> witness_member;  // W: every member U ⊆ W has U[B] ⊆ A
  std::vector<std::size_t> members_below;     // members contained in W
  std::optional<std::pair<std::size_t, Index>> failure;  // (member U, point of U[B] outside A)
};

/// Whether some member W makes U[B] ⊆ A hold for every member U ⊆ W.
inline ExcisionHypothesis check_excision_hypothesis(const SemiUniformBase& base, const IndexSet& a,
                                                    const IndexSet& b) {
  require_in_range(base.space(), a);
  if (!is_subset(b, a)) throw Error(ErrorKind::invalid_argument, "excised set B must lie inside A");
  ExcisionHypothesis result;
  // Try members from the smallest up; the first failure seen is the witness.
  std::vector<std::size_t> order(base.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return base[x].pair_count() < base[y].pair_count(); });
  for (std::size_t w : order) {
    std::vector<std::size_t> below;
    std::optional<std::pair<std::size_t, Index>> failure;
    for (std::size_t u = 0; u < base.size() && !failure; ++u) {
      if (!base[u].is_subset_of(base[w])) continue;
      below.push_back(u);
      for (Index y : relation_image(base[u], b)) {
        if (!a.contains(y)) {
          failure = std::pair{u, y};
          break;
        }
      }
    }
    if (!failure) {
      result.holds = true;
      result.witness_member = w;
      result.members_below = std::move(below);
      result.failure.reset();
      return result;
    }
    if (!result.failure) result.failure = failure;
  }
  return result;
}

/// Compares H(X − B, A − B : U_{X−B}) with H(X, A : U) for every member U below
/// the excision witness, using the symmetric part of U. Ranks and torsion must
/// agree in dimensions 0..max_dim-1.
inline AxiomVerdict verify_excision(const SemiUniformBase& base, const IndexSet& a, const IndexSet& b,
                                    const Coefficients& coeffs, std::size_t max_dim) {
  const auto& space = base.space();
  AxiomVerdict verdict{"excision", "A=" + detail::set_string(space, a) + ", B=" + detail::set_string(space, b)};
  const auto hyp = check_excision_hypothesis(base, a, b);
  if (!hyp.holds) {
    std::string msg = "U[B] ⊄ A";
    if (hyp.failure) msg += " (member " + std::to_string(hyp.failure->first) + ", point " + space->label(hyp.failure->second) + ")";
    throw Error(ErrorKind::hypothesis_violated, msg);
  }
  const IndexSet rest = set_difference(all_points(space), b);
  const IndexSet a_rest = set_difference(a, b);
  // A − B reindexed into X − B.
  IndexSet a_rest_local;
  {
    Index local = 0;
    for (Index x : rest) {
      if (a_rest.contains(x)) a_rest_local.insert(local);
      ++local;
    }
  }
  for (std::size_t m : hyp.members_below) {
    const Relation u = symmetric_part(base[m]);
    const auto whole = homology(detail::pair_or_absolute(u, a, max_dim), coeffs);
    HomologyResult excised;
    if (rest.empty()) {
      excised.groups.resize(max_dim + 1);
    } else {
      excised = homology(detail::pair_or_absolute(relativize(u, rest), a_rest_local, max_dim), coeffs);
    }
    if (!whole.same_invariants(excised, max_dim)) {
      verdict.fail("member " + std::to_string(m) + ": H(X,A) = " +
                   detail::betti_string(detail::prefix(whole.betti(), max_dim)) + ", H(X-B,A-B) = " +
                   detail::betti_string(detail::prefix(excised.betti(), max_dim)));
    } else {
      verdict.notes.push_back("member " + std::to_string(m) + ": relative betti " +
                              detail::betti_string(detail::prefix(whole.betti(), max_dim)));
    }
  }
  return verdict;
}

/// Uniform discretization {0, 1/(n-1), …, 1} with distances |i - j| / (n - 1).
inline SemiPseudometric interval_metric(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "interval discretization needs n >= 2");
  auto space = make_space(n);
  std::vector<double> table(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      table[i * n + j] = static_cast<double>(i > j ? i - j : j - i) / static_cast<double>(n - 1);
  return SemiPseudometric(std::move(space), std::move(table));
}

inline bool interval_connected(std::size_t n, double r) { return r > 1.0 / static_cast<double>(n - 1); }

/// Reduced homology of the strict-r Vietoris-Rips complex of the discretized
/// interval vanishes below max_dim whenever r exceeds the spacing.
inline AxiomVerdict check_interval_acyclic(std::size_t n, double r, std::size_t max_dim) {
  if (!(r > 0.0)) throw Error(ErrorKind::invalid_argument, "interval scale must be positive");
  AxiomVerdict verdict{"interval", "n=" + std::to_string(n) + ", r=" + detail::number(r)};
  const auto k = clique_complex(metric_relation(interval_metric(n), r, ScaleMode::strict), max_dim);
  const auto h = homology(k, Coefficients::integers(), {.reduced = true});
  const auto b = detail::prefix(h.betti(), max_dim);
  verdict.notes.push_back("reduced betti " + detail::betti_string(b));
  if (!interval_connected(n, r)) {
    verdict.fail("hypothesis r > spacing fails (r <= 1/(n-1)); unreduced β₀ = " + std::to_string(b.at(0) + 1));
    return verdict;
  }
  for (std::size_t d = 0; d < b.size(); ++d) {
    if (b[d] != 0 || !h.groups[d].torsion.empty()) verdict.fail("reduced H_" + std::to_string(d) + " is nonzero");
  }
  return verdict;
}

/// Homotopy check on the cylinder X × I_n with relation u × U_r: the end
/// inclusions g₀(x) = (x, 0) and g₁(x) = (x, 1) must induce equal maps, and
/// each carrier S(σ) (the cylinder over a maximal simplex σ) must be acyclic.
inline AxiomVerdict verify_homotopy_cylinder(const Relation& u, std::size_t n, double r, const Coefficients& coeffs,
                                             std::size_t max_dim) {
  if (!u.is_symmetric()) throw Error(ErrorKind::not_symmetric, "cylinder check needs a symmetric relation");
  AxiomVerdict verdict{"homotopy", std::to_string(u.size()) + "-point relation with " +
                                       std::to_string(u.pair_count()) + " pairs, n=" + std::to_string(n) +
                                       ", r=" + detail::number(r)};
  const Relation interval = metric_relation(interval_metric(n), r, ScaleMode::strict);
  if (!interval_connected(n, r)) verdict.fail("hypothesis r > spacing fails; carrier argument does not apply");

  const Relation cylinder = product_relation(u, interval);
  const auto base_complex = share(clique_complex(u, max_dim));
  const auto cylinder_complex = share(clique_complex(cylinder, max_dim));
  VertexMap g0(u.size()), g1(u.size());
  for (Index x = 0; x < u.size(); ++x) {
    g0[x] = x * n;
    g1[x] = x * n + (n - 1);
  }
  const auto m0 = induced_map(SimplicialVertexMap(base_complex, cylinder_complex, g0), coeffs);
  const auto m1 = induced_map(SimplicialVertexMap(base_complex, cylinder_complex, g1), coeffs);
  for (std::size_t k = 0; k < m0.maps.size(); ++k) {
    if (!(m0.maps[k] == m1.maps[k])) {
      verdict.fail("g0* != g1* in dimension " + std::to_string(k) + ": " + m0.maps[k].to_string() + " vs " +
                   m1.maps[k].to_string());
    }
  }

  std::size_t carriers = 0;
  for (const auto& sigma : base_complex->maximal_simplices()) {
    IndexSet support;
    for (Index v : sigma.vertices())
      for (Index t = 0; t < n; ++t) support.insert(v * n + t);
    const auto carrier = clique_complex(relativize(cylinder, support), max_dim);
    const auto h = homology(carrier, coeffs, {.reduced = true});
    for (std::size_t d = 0; d < std::min(h.exact_dims(), max_dim); ++d) {
      if (h.groups[d].betti != 0) {
        verdict.fail("S(" + sigma.to_string(u.space().get()) + ") has reduced H_" + std::to_string(d) + " of rank " +
                     std::to_string(h.groups[d].betti));
      }
    }
    ++carriers;
  }
  verdict.notes.push_back("checked " + std::to_string(m0.maps.size()) + " dimensions and " +
                          std::to_string(carriers) + " carriers");
  return verdict;
}

/// Dowker duality on a single cover: the Vietoris complex of the cover
/// (simplices lying in one cover set) and its nerve have equal Betti numbers in
/// dimensions 0..max_dim-1. The clique complex of the Vietoris relation is
/// reported alongside; it may differ for covers that are not clique-closed.
inline AxiomVerdict verify_dowker(const Cover& u, const Coefficients& coeffs, std::size_t max_dim) {
  AxiomVerdict verdict{"dowker", std::to_string(u.size()) + " sets on " + std::to_string(u.space()->size()) +
                                     " points"};
  const auto vietoris = homology(vietoris_complex(u, max_dim), coeffs);
  const auto nerve = homology(nerve_of_cover(u, max_dim), coeffs);
  const auto vb = detail::prefix(vietoris.betti(), max_dim);
  const auto nb = detail::prefix(nerve.betti(), max_dim);
  if (!vietoris.same_invariants(nerve, max_dim)) {
    verdict.fail("vietoris betti " + detail::betti_string(vb) + " != nerve betti " + detail::betti_string(nb));
  }
  const auto clique = homology(clique_complex(vietoris_relation(u), max_dim), coeffs);
  const auto cb = detail::prefix(clique.betti(), max_dim);
  verdict.notes.push_back("vietoris/nerve betti " + detail::betti_string(vb) + ", clique complex of V_U " +
                          detail::betti_string(cb));
  return verdict;
}

namespace detail {

/// A member of `target` base containing f(member) for some member of `source`,
/// preferring the minima.
inline std::pair<std::size_t, std::size_t> matched_members(const VertexMap& f, const SemiUniformBase& source,
                                                           const SemiUniformBase& target, std::size_t target_member) {
  const Relation& v = target[target_member];
  std::vector<std::size_t> order;
  if (auto m = source.minimum()) order.push_back(*m);
  for (std::size_t i = 0; i < source.size(); ++i) order.push_back(i);
  for (std::size_t u : order) {
    bool inside = true;
    for (auto [i, j] : source[u].pairs()) inside = inside && v.contains(f[i], f[j]);
    if (inside) return {u, target_member};
  }
  throw Error(ErrorKind::hypothesis_violated, "no member maps into the chosen target member");
}

}  // namespace detail

/// Checks (g∘f)_* = g_* ∘ f_* and id_* = id at matched members U, V, W with
/// f(U) ⊆ V and g(V) ⊆ W. Both maps must be uniformly continuous.
inline AxiomVerdict verify_functoriality(const VertexMap& f, const VertexMap& g, const SemiUniformBase& bx,
                                         const SemiUniformBase& by, const SemiUniformBase& bz,
                                         const Coefficients& coeffs, std::size_t max_dim) {
  AxiomVerdict verdict{"functoriality", std::to_string(bx.space()->size()) + " -> " +
                                            std::to_string(by.space()->size()) + " -> " +
                                            std::to_string(bz.space()->size()) + " points"};
  if (!check_uniform_continuity(f, bx, by).continuous) {
    throw Error(ErrorKind::hypothesis_violated, "f is not uniformly continuous");
  }
  if (!check_uniform_continuity(g, by, bz).continuous) {
    throw Error(ErrorKind::hypothesis_violated, "g is not uniformly continuous");
  }
  const std::size_t w = bz.minimum().value_or(0);
  const std::size_t v = detail::matched_members(g, by, bz, w).first;
  const std::size_t u = detail::matched_members(f, bx, by, v).first;

  const auto ku = share(clique_complex(symmetric_part(bx[u]), max_dim));
  const auto kv = share(clique_complex(symmetric_part(by[v]), max_dim));
  const auto kw = share(clique_complex(symmetric_part(bz[w]), max_dim));
  const SimplicialVertexMap fm(ku, kv, f);
  const SimplicialVertexMap gm(kv, kw, g);
  const auto composite = induced_map(compose(gm, fm), coeffs);
  const auto product = compose(induced_map(gm, coeffs), induced_map(fm, coeffs));
  if (!(composite == product)) verdict.fail("(g∘f)_* != g_* ∘ f_*");
  for (const auto& k : {ku, kv, kw}) {
    if (!induced_map(identity_map(k), coeffs).is_identity()) verdict.fail("identity does not induce the identity");
  }
  std::string shapes;
  for (const auto& m : composite.maps) shapes += (shapes.empty() ? "" : " ") + m.to_string();
  verdict.notes.push_back("members U=" + std::to_string(u) + ", V=" + std::to_string(v) + ", W=" +
                          std::to_string(w) + "; (g∘f)_* = " + shapes);
  return verdict;
}

}  // namespace vrhom
