#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vrhom/generate.hpp"
#include "vrhom/semiuniform.hpp"

namespace vrhom {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dimension", "excision", "homotopy", "dowker", "interval", "functoriality"};
  return names;
}

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t max_dim = 3;
  Coefficients coeffs = Coefficients::rationals();
};

namespace detail {

inline Relation cycle_relation(std::size_t n) {
  std::vector<IndexPair> edges;
  for (Index i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return graph_relation(edges, make_space(n), false);
}

inline Relation path_relation(std::size_t n) {
  std::vector<IndexPair> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return graph_relation(edges, make_space(n), false);
}

/// Runs `one` on `trials` generated instances and folds the results into a
/// single verdict; the first failures are kept as witnesses.
template <class Fn>
AxiomVerdict fuzz(const std::string& axiom, const std::string& instance, std::size_t trials, Fn&& one) {
  AxiomVerdict total{axiom, instance};
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    AxiomVerdict v = one(t);
    if (!v.pass) {
      ++failures;
      if (total.witness.size() < 5) total.witness.push_back("trial " + std::to_string(t) + " [" + v.instance + "]: " + v.witness.front());
      total.pass = false;
    }
  }
  total.notes.push_back(std::to_string(trials) + " trials, " + std::to_string(failures) + " failures");
  return total;
}

}  // namespace detail

inline std::vector<AxiomVerdict> dimension_suite(const SuiteOptions& opt) {
  std::vector<AxiomVerdict> out;
  for (const auto& c : {Coefficients::integers(), Coefficients::rationals(), Coefficients::prime_field(2)})
    out.push_back(verify_dimension(c, opt.max_dim));
  return out;
}

inline std::vector<AxiomVerdict> excision_suite(const SuiteOptions& opt) {
  std::vector<AxiomVerdict> out;
  const auto square = SemiUniformBase::single(detail::cycle_relation(4));
  out.push_back(verify_excision(square, {0, 1, 2}, {1}, opt.coeffs, opt.max_dim));
  const auto path = SemiUniformBase::single(detail::path_relation(4));
  out.push_back(verify_excision(path, {0, 1}, {0}, opt.coeffs, opt.max_dim));
  out.push_back(verify_excision(path, {0, 1}, {}, opt.coeffs, opt.max_dim));

  gen::Rng rng(opt.seed);
  out.push_back(detail::fuzz("excision", "random graph bases, at most 8 points", opt.trials, [&](std::size_t) {
    const std::size_t n = gen::uniform_count(rng, 1, 8);
    const auto space = make_space(n);
    std::vector<Relation> members{gen::random_graph_relation(rng, space, 0.4)};
    if (gen::coin(rng, 0.5)) members.push_back(gen::random_graph_relation(rng, space, 0.5));
    const SemiUniformBase base(space, members);
    const IndexSet b = gen::random_subset(rng, n, 0.25);
    IndexSet a = gen::random_subset(rng, n, 0.3);
    for (const auto& m : base.members()) {
      const auto img = relation_image(m, b);
      a.insert(img.begin(), img.end());
    }
    return verify_excision(base, a, b, opt.coeffs, opt.max_dim);
  }));
  return out;
}

inline std::vector<AxiomVerdict> homotopy_suite(const SuiteOptions& opt) {
  const Coefficients q = opt.coeffs.is_field() ? opt.coeffs : Coefficients::rationals();
  std::vector<AxiomVerdict> out;
  out.push_back(verify_homotopy_cylinder(detail::cycle_relation(4), 5, 0.3, q, opt.max_dim));
  out.push_back(verify_homotopy_cylinder(Relation::diagonal(make_space(2)), 4, 0.4, q, opt.max_dim));
  out.push_back(verify_homotopy_cylinder(Relation::full(make_space(3)), 4, 0.4, q, opt.max_dim));
  // Every symmetric relation on at most three points.
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto space = make_space(n);
    std::vector<IndexPair> slots;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    out.push_back(detail::fuzz("homotopy", "all symmetric relations on " + std::to_string(n) + (n == 1 ? " point" : " points"),
                               std::size_t{1} << slots.size(), [&](std::size_t mask) {
                                 std::vector<IndexPair> edges;
                                 for (std::size_t s = 0; s < slots.size(); ++s)
                                   if (mask >> s & 1) edges.push_back(slots[s]);
                                 return verify_homotopy_cylinder(graph_relation(edges, space, false), 4, 0.4, q,
                                                                 opt.max_dim);
                               }));
  }
  return out;
}

inline std::vector<AxiomVerdict> dowker_suite(const SuiteOptions& opt) {
  const Coefficients q = opt.coeffs.is_field() ? opt.coeffs : Coefficients::rationals();
  std::vector<AxiomVerdict> out;
  out.push_back(verify_dowker(Cover(make_space(3), {{0, 1}, {1, 2}}), q, opt.max_dim));
  out.push_back(verify_dowker(Cover(make_space(6), {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}), q, opt.max_dim));
  out.push_back(verify_dowker(Cover(make_space(4), {{0, 1, 2, 3}}), q, opt.max_dim));
  gen::Rng rng(opt.seed);
  out.push_back(detail::fuzz("dowker", "random covers, at most 7 points and 5 sets", opt.trials, [&](std::size_t) {
    const auto space = make_space(gen::uniform_count(rng, 1, 7));
    return verify_dowker(gen::random_cover(rng, space, 5), q, opt.max_dim);
  }));
  return out;
}

inline std::vector<AxiomVerdict> interval_suite(const SuiteOptions& opt) {
  std::vector<AxiomVerdict> out;
  out.push_back(check_interval_acyclic(5, 0.3, opt.max_dim));
  out.push_back(check_interval_acyclic(2, 2.0, opt.max_dim));
  for (std::size_t n = 2; n <= 8; ++n) {
    const double spacing = 1.0 / static_cast<double>(n - 1);
    out.push_back(check_interval_acyclic(n, 1.5 * spacing, opt.max_dim));
    out.push_back(check_interval_acyclic(n, 3.5 * spacing, opt.max_dim));
  }
  return out;
}

inline std::vector<AxiomVerdict> functoriality_suite(const SuiteOptions& opt) {
  const Coefficients q = opt.coeffs.is_field() ? opt.coeffs : Coefficients::rationals();
  std::vector<AxiomVerdict> out;
  const Relation square = detail::cycle_relation(4);
  const auto b = SemiUniformBase::single(square);
  out.push_back(verify_functoriality({0, 1, 2, 3}, {0, 1, 2, 3}, b, b, b, q, opt.max_dim));
  out.push_back(verify_functoriality({1, 2, 3, 0}, {1, 2, 3, 0}, b, b, b, q, opt.max_dim));
  const auto edge = SemiUniformBase::single(relativize(square, {0, 1}));
  const auto point = SemiUniformBase::single(Relation::diagonal(make_space(1)));
  out.push_back(verify_functoriality({0, 1}, {0, 0, 0, 0}, edge, b, point, q, opt.max_dim));
  return out;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<AxiomVerdict> run_suite(std::string_view name, const SuiteOptions& opt) {
  if (name == "all") {
    std::vector<AxiomVerdict> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "dimension") return dimension_suite(opt);
  if (name == "excision") return excision_suite(opt);
  if (name == "homotopy") return homotopy_suite(opt);
  if (name == "dowker") return dowker_suite(opt);
  if (name == "interval") return interval_suite(opt);
  if (name == "functoriality") return functoriality_suite(opt);
  throw Error(ErrorKind::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace vrhom
