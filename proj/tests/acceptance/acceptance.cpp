// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "bridge.hpp"
#include "vrhom/generate.hpp"

using namespace vrhom;

namespace {

const Coefficients Z = Coefficients::integers();
const Coefficients QQ = Coefficients::rationals();
const Coefficients F2 = Coefficients::prime_field(2);

using Sizes = std::vector<std::size_t>;

/// Collects the first few mismatches of a criterion.
struct Check {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 3) failures.push_back(what);
    if (!ok && failures.size() == 3) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

std::string str(const Sizes& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

/// Layers of the subset-scan clique complex, keeping simplices inside `keep`.
oracle::Layers cliques_within(const oracle::Adjacency& adj, const IndexSet& keep, std::size_t max_dim) {
  auto all = oracle::subset_cliques(adj, max_dim);
  for (auto& layer : all) {
    std::erase_if(layer, [&](const oracle::Vertices& s) {
      return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return !keep.contains(v); });
    });
  }
  return all;
}

oracle::Adjacency adjacency_from(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& related) {
  oracle::Adjacency adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = i == j || related(i, j);
  return adj;
}

IndexSet range(std::size_t n) {
  IndexSet s;
  for (Index i = 0; i < n; ++i) s.insert(i);
  return s;
}

/// Whether chains a and b (dimension k, over the simplices of `total`) differ
/// by a boundary.
bool homologous(const oracle::Layers& total, std::size_t k, const std::map<oracle::Vertices, oracle::Q>& a,
                const std::map<oracle::Vertices, oracle::Q>& b) {
  auto d = oracle::boundary(total, {}, k + 1);
  if (d.empty()) d.assign(total[k].size(), {});
  const std::size_t before = oracle::rank(d);
  for (std::size_t r = 0; r < total[k].size(); ++r) {
    const auto& s = total[k][r];
    oracle::Q v = 0;
    if (auto it = a.find(s); it != a.end()) v += it->second;
    if (auto it = b.find(s); it != b.end()) v -= it->second;
    d[r].push_back(v);
  }
  return oracle::rank(d) == before;
}

// ---- criteria ------------------------------------------------------------------

Check dimension_axiom() {
  Check c;
  auto point = make_space(std::vector<std::string>{"p"});
  const auto k = clique_complex(Relation::diagonal(point), 3);
  for (const auto& coeffs : {Z, QQ, F2}) {
    c.expect(verify_dimension(coeffs).pass, "verify_dimension " + coeffs.to_string());
    const auto h = homology(k, coeffs);
    const auto b = oracle::prefix(h.betti(), 3);
    c.expect(b == Sizes{1, 0, 0}, coeffs.to_string() + " betti " + str(b));
    for (const auto& g : h.groups) c.expect(g.torsion.empty(), coeffs.to_string() + " torsion");
    if (coeffs.is_field()) {
      c.expect(oracle::prefix(cohomology(k, coeffs).betti(), 3) == Sizes{1, 0, 0}, "cohomology " + coeffs.to_string());
    }
  }
  c.expect(oracle::betti(oracle::layers(k), 3) == Sizes{1, 0, 0}, "oracle betti of the point");
  return c;
}

Check graph_homology() {
  Check c;
  gen::Rng rng(2001);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = gen::uniform_count(rng, 1, 10);
    const auto u = gen::random_graph_relation(rng, make_space(n), gen::coin(rng, 0.5) ? 0.3 : 0.6);
    const auto limit = limit_homology(SemiUniformBase::single(u), std::nullopt, Z, 3);
    const auto direct = homology(clique_complex(u, 3), Z);
    const auto expected = oracle::betti(oracle::subset_cliques(oracle::adjacency(u), 3), 3);
    const auto lb = oracle::prefix(limit.homology->betti(), 3);
    c.expect(limit.homology->same_invariants(direct, 3), "limit vs direct on graph " + std::to_string(t));
    c.expect(lb == expected, "graph " + std::to_string(t) + ": limit " + str(lb) + ", oracle " + str(expected));
  }
  const auto k4 = Relation::full(make_space(4));
  const auto b = oracle::prefix(limit_homology(SemiUniformBase::single(k4), std::nullopt, Z, 3).homology->betti(), 3);
  c.expect(b == Sizes{1, 0, 0}, "K4 betti " + str(b));
  return c;
}

Check finite_metric() {
  Check c;
  const auto square = oracle::unit_square();
  const std::vector<std::pair<double, Sizes>> golden{{0.5, {4, 0}}, {1.0, {1, 1}}, {1.5, {1, 0}}};
  for (const auto& [q, expected] : golden) {
    const double delta = *smallest_gap(square, {q}) / 2;
    const auto limit = limit_homology(scale_base(square, q, {delta, delta / 2, delta / 4}), std::nullopt, Z, 2);
    const auto b = oracle::prefix(limit.homology->betti(), 2);
    c.expect(b == expected, "square at q=" + std::to_string(q) + ": " + str(b));
  }
  gen::Rng rng(2003);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = gen::uniform_count(rng, 2, 8);
    const auto d = gen::random_metric(rng, make_space(n));
    auto values = d.distance_values();
    for (int s = 0; s < 3; ++s) {
      const double q = values[gen::uniform_count(rng, 0, values.size() - 1)];
      const double delta = smallest_gap(d, {q}).value_or(1.0) / 2;
      const auto limit = limit_homology(scale_base(d, q, {delta, delta / 2}), std::nullopt, QQ, 3);
      const auto direct = homology(clique_complex(metric_relation(d, q, ScaleMode::closed), 3), QQ);
      const auto adj = adjacency_from(n, [&](std::size_t i, std::size_t j) { return d(i, j) <= q; });
      const auto expected = oracle::betti(oracle::subset_cliques(adj, 3), 3);
      const auto lb = oracle::prefix(limit.homology->betti(), 3);
      c.expect(limit.homology->same_invariants(direct, 3) && lb == expected,
               "metric " + std::to_string(t) + " at q=" + std::to_string(q) + ": " + str(lb) + " vs " + str(expected));
    }
  }
  return c;
}

Check excision() {
  Check c;
  const auto cycle = oracle::cycle(4);
  const auto v = verify_excision(SemiUniformBase::single(cycle), {0, 1, 2}, {1}, Z, 2);
  c.expect(v.pass, "4-cycle verdict");
  const auto adj = oracle::adjacency(cycle);
  const auto whole = oracle::betti(cliques_within(adj, range(4), 3), cliques_within(adj, {0, 1, 2}, 3), 2);
  const auto cut = oracle::betti(cliques_within(adj, {0, 2, 3}, 3), cliques_within(adj, {0, 2}, 3), 2);
  c.expect(whole == Sizes{0, 1} && cut == Sizes{0, 1}, "4-cycle pair " + str(whole) + " / " + str(cut));

  gen::Rng rng(2005);
  for (int t = 0; t < 250; ++t) {
    const std::size_t n = gen::uniform_count(rng, 1, 8);
    const auto u = gen::random_graph_relation(rng, make_space(n), 0.4);
    const auto b = gen::random_subset(rng, n, 0.3);
    IndexSet a = relation_image(u, b);
    for (Index x : gen::random_subset(rng, n, 0.3)) a.insert(x);
    if (a.empty()) a.insert(gen::uniform_count(rng, 0, n - 1));
    const auto verdict = verify_excision(SemiUniformBase::single(u), a, b, QQ, 3);
    const auto uadj = oracle::adjacency(u);
    const IndexSet rest = set_difference(range(n), b);
    const auto lhs = oracle::betti(cliques_within(uadj, range(n), 4), cliques_within(uadj, a, 4), 3);
    const auto rhs = oracle::betti(cliques_within(uadj, rest, 4), cliques_within(uadj, set_difference(a, b), 4), 3);
    c.expect(verdict.pass && lhs == rhs, "trial " + std::to_string(t) + ": " + str(lhs) + " vs " + str(rhs));
  }
  return c;
}

Check exactness() {
  Check c;
  gen::Rng rng(2007);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = gen::uniform_count(rng, 1, 8);
    const auto u = gen::random_graph_relation(rng, make_space(n), 0.5);
    auto a = gen::random_subset(rng, n, 0.5);
    if (a.empty()) a.insert(0);
    const auto pair = pair_complex(u, a, 4);
    const auto report = check_les_exactness(pair, QQ, 3);
    c.expect(report.exact, "pair " + std::to_string(t) + " not exact");
    const auto adj = oracle::adjacency(u);
    const auto bx = oracle::betti(cliques_within(adj, range(n), 4), 4);
    const auto ba = oracle::betti(cliques_within(adj, a, 4), 4);
    const auto bxa = oracle::betti(cliques_within(adj, range(n), 4), cliques_within(adj, a, 4), 4);
    for (const auto& slot : report.slots) {
      const auto& expected = slot.group.ends_with("(A)") ? ba : slot.group.ends_with("(X)") ? bx : bxa;
      c.expect(slot.dimension == expected[slot.degree], "pair " + std::to_string(t) + " " + slot.group + " rank");
    }
  }
  return c;
}

/// g0(x) = (x, 0) and g1(x) = (x, n-1) send each homology generator to
/// homologous chains of the cylinder.
bool cylinder_oracle(const Relation& u, std::size_t n, double r, std::size_t max_dim) {
  const std::size_t m = u.size();
  const double step = 1.0 / static_cast<double>(n - 1);
  const auto uadj = oracle::adjacency(u);
  const auto adj = adjacency_from(m * n, [&](std::size_t p, std::size_t q) {
    const double dt = std::abs(static_cast<double>(p % n) - static_cast<double>(q % n)) * step;
    return uadj[p / n][q / n] && dt < r;
  });
  const auto cylinder = oracle::subset_cliques(adj, max_dim);
  const auto h = homology(clique_complex(u, max_dim), QQ, {.generators = true});
  const auto base_betti = oracle::betti(oracle::subset_cliques(uadj, max_dim), max_dim);
  for (std::size_t k = 0; k < max_dim; ++k) {
    if (h.groups[k].generators.size() != base_betti[k]) return false;
    for (const auto& z : h.groups[k].generators) {
      std::map<oracle::Vertices, oracle::Q> c0, c1;
      for (const auto& term : z) {
        oracle::Vertices v0, v1;
        for (Index x : term.simplex.vertices()) {
          v0.push_back(x * n);
          v1.push_back(x * n + n - 1);
        }
        c0[v0] += term.coefficient;
        c1[v1] += term.coefficient;
      }
      if (!homologous(cylinder, k, c0, c1)) return false;
    }
  }
  return true;
}

Check homotopy() {
  Check c;
  for (std::size_t n = 2; n <= 8; ++n) {
    const double step = 1.0 / static_cast<double>(n - 1);
    for (double r : {1.01 * step, 1.5 * step, 2.5 * step, 1.1}) {
      const auto v = check_interval_acyclic(n, r, 3);
      const auto adj = adjacency_from(n, [&](std::size_t i, std::size_t j) {
        return std::abs(static_cast<double>(i) - static_cast<double>(j)) * step < r;
      });
      const auto b = oracle::betti(oracle::subset_cliques(adj, 4), 3);
      c.expect(v.pass && b == Sizes{1, 0, 0}, "interval n=" + std::to_string(n) + " r=" + std::to_string(r) + " " + str(b));
    }
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    auto space = make_space(m);
    std::vector<IndexPair> slots;
    for (Index i = 0; i < m; ++i)
      for (Index j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<IndexPair> edges;
      for (std::size_t b = 0; b < slots.size(); ++b)
        if (mask >> b & 1) edges.push_back(slots[b]);
      const auto u = graph_relation(edges, space, false);
      const auto v = verify_homotopy_cylinder(u, 4, 0.4, QQ, 3);
      c.expect(v.pass, v.instance + (v.witness.empty() ? "" : ": " + v.witness[0]));
      c.expect(cylinder_oracle(u, 4, 0.4, 3), v.instance + ": oracle disagrees");
    }
  }
  const auto v = verify_homotopy_cylinder(oracle::cycle(4), 5, 0.3, QQ, 3);
  c.expect(v.pass, "4-cycle cylinder");
  c.expect(cylinder_oracle(oracle::cycle(4), 5, 0.3, 3), "4-cycle cylinder oracle");
  return c;
}

Check dowker() {
  Check c;
  gen::Rng rng(2011);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = gen::uniform_count(rng, 1, 7);
    const auto cover = gen::random_cover(rng, make_space(n), 5);
    const auto& sets = cover.sets();
    const auto verdict = verify_dowker(cover, QQ, 3);
    // Nerve: index sets with a common point. Vietoris: point sets inside one cover set.
    const auto nerve = cliques_within(adjacency_from(sets.size(), [](std::size_t, std::size_t) { return true; }),
                                      range(sets.size()), 4);
    oracle::Layers nerve_layers(nerve.size()), viet_layers(5);
    for (std::size_t d = 0; d < nerve.size(); ++d)
      for (const auto& s : nerve[d]) {
        const bool common = std::any_of(sets[s[0]].begin(), sets[s[0]].end(), [&](Index x) {
          return std::all_of(s.begin(), s.end(), [&](std::size_t i) { return sets[i].contains(x); });
        });
        if (common) nerve_layers[d].push_back(s);
      }
    const auto all = oracle::subset_cliques(adjacency_from(n, [](std::size_t, std::size_t) { return true; }), 4);
    for (std::size_t d = 0; d < all.size(); ++d)
      for (const auto& s : all[d]) {
        const bool inside = std::any_of(sets.begin(), sets.end(), [&](const IndexSet& set) {
          return std::all_of(s.begin(), s.end(), [&](std::size_t x) { return set.contains(x); });
        });
        if (inside) viet_layers[d].push_back(s);
      }
    const auto nb = oracle::betti(nerve_layers, 3), vb = oracle::betti(viet_layers, 3);
    c.expect(verdict.pass && nb == vb, "cover " + std::to_string(t) + ": nerve " + str(nb) + ", vietoris " + str(vb));
  }
  return c;
}

Check circle() {
  Check c;
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 12; ++i) {
    const double a = 2 * std::numbers::pi * i / 12;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  const auto d = SemiPseudometric::euclidean(make_space(12), pts);
  const auto u = metric_relation(d, 0.6, ScaleMode::closed);
  const auto h = homology(clique_complex(u, 2), Z);
  const auto b = oracle::prefix(h.betti(), 2);
  c.expect(b == Sizes{1, 1}, "betti " + str(b));
  c.expect(u == oracle::cycle(12), "relation is the 12-cycle");
  c.expect(oracle::betti(oracle::subset_cliques(oracle::adjacency(oracle::cycle(12)), 2), 2) == Sizes{1, 1},
           "12-cycle oracle");
  const auto file = to_metric(std::get<DistanceDocument>(parse_space_file(VRHOM_TEST_DATA_DIR "/circle12.csv", SpaceFormat::csv_dist)));
  const auto hf = homology(clique_complex(metric_relation(file, 0.6, ScaleMode::closed), 2), Z);
  c.expect(oracle::prefix(hf.betti(), 2) == Sizes{1, 1}, "circle12.csv betti");
  return c;
}

Check torsion() {
  Check c;
  const auto k = SimplicialComplex::from_maximal(make_space(6), oracle::rp2_triangles());
  const auto hz = homology(k, Z);
  c.expect(hz.groups[1].torsion == std::vector<BigInt>{2}, "H1 torsion over Z");
  c.expect(hz.betti() == Sizes{1, 0, 0}, "free ranks " + str(hz.betti()));
  const auto h2 = homology(k, F2);
  c.expect(h2.betti()[1] == 1, "beta_1 over F2");

  const auto layers = oracle::layers(k);
  std::vector<oracle::Big> torsion;
  for (const auto& f : oracle::invariant_factors(oracle::to_integer(oracle::boundary(layers, {}, 2))))
    if (f > 1) torsion.push_back(f);
  c.expect(torsion == std::vector<oracle::Big>{2}, "oracle invariant factors of the 2-boundary");
  c.expect(oracle::betti(layers, 3, 2) == Sizes{1, 1, 1}, "oracle F2 betti");
  c.expect(oracle::betti(layers, 3) == Sizes{1, 0, 0}, "oracle Q betti");
  return c;
}

Check smith_kernel() {
  Check c;
  gen::Rng rng(2017);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = gen::uniform_count(rng, 1, 12), cols = gen::uniform_count(rng, 1, 12);
    const double zero_p = t % 3 == 0 ? 0.6 : 0.1;
    IntegerMatrix m(rows, cols);
    oracle::DenseZ dense(rows, std::vector<oracle::Big>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) dense[i][j] = m(i, j) = gen::coin(rng, zero_p) ? 0 : entry(rng);
    const auto r = smith_normal_form(m);
    IntegerMatrix diag(rows, cols);
    for (std::size_t i = 0; i < r.d.size(); ++i) diag(i, i) = r.d[i];
    c.expect(r.left * m * r.right == diag, "reconstruction " + std::to_string(t));
    auto to_dense = [](const IntegerMatrix& x) {
      oracle::DenseZ out(x.rows(), std::vector<oracle::Big>(x.cols()));
      for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out[i][j] = x(i, j);
      return out;
    };
    c.expect(abs(oracle::det(to_dense(r.left))) == 1 && abs(oracle::det(to_dense(r.right))) == 1,
             "unimodularity " + std::to_string(t));
    bool chain = r.d.size() == std::min(rows, cols);
    for (std::size_t i = 0; chain && i + 1 < r.d.size(); ++i) {
      chain = r.d[i] >= 0 && (r.d[i] == 0 ? r.d[i + 1] == 0 : r.d[i + 1] % r.d[i] == 0);
    }
    c.expect(chain, "divisibility " + std::to_string(t));
    if (std::max(rows, cols) <= 5) {
      std::vector<oracle::Big> nonzero;
      for (const auto& x : r.d)
        if (x != 0) nonzero.push_back(x);
      c.expect(nonzero == oracle::invariant_factors(dense), "invariant factors " + std::to_string(t));
    }
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"dimension axiom on the one-point space", dimension_axiom},
      {"graph homology equals clique-complex homology", graph_homology},
      {"finite metric spaces: scale base limit equals U_{<=q}", finite_metric},
      {"excision", excision},
      {"long exact sequence of pairs", exactness},
      {"homotopy: intervals acyclic, cylinder end maps agree", homotopy},
      {"vietoris complex and nerve agree", dowker},
      {"12-point circle at q=0.6", circle},
      {"projective plane torsion", torsion},
      {"smith normal form invariants", smith_kernel},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && c.ok();
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << c.cases
              << " checks, " << std::fixed << std::setprecision(2) << secs << "s)";
    for (const auto& f : c.failures) std::cout << "\n      " << f;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
