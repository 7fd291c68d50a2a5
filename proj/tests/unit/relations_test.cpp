#include <gtest/gtest.h>

#include "bridge.hpp"
#include "vrhom/generate.hpp"

using namespace vrhom;

namespace {

std::set<IndexPair> pair_set(const Relation& u) {
  auto p = u.pairs();
  return {p.begin(), p.end()};
}

std::set<IndexPair> with_diagonal(std::size_t n, std::set<IndexPair> extra) {
  for (Index i = 0; i < n; ++i) extra.emplace(i, i);
  return extra;
}

}  // namespace

TEST(FiniteSpace, RejectsDuplicateLabels) {
  EXPECT_THROW(FiniteSpace({"a", "b", "a"}), Error);
  const FiniteSpace s({"a", "b"});
  EXPECT_EQ(s.index_of("b"), 1u);
  EXPECT_FALSE(s.find("z").has_value());
}

TEST(FiniteSpace, ProductLabelsAreRowMajor) {
  auto p = product_space(make_space(std::vector<std::string>{"x", "y"}), make_space(2));
  ASSERT_EQ(p->size(), 4u);
  EXPECT_EQ(p->label(1), "(x,1)");
  EXPECT_EQ(p->label(2), "(y,0)");
}

TEST(Relation, ConstructorsAdjoinTheDiagonal) {
  auto s = make_space(3);
  for (const auto& u : {Relation(s, {{0, 1}}), Relation::diagonal(s), graph_relation({}, s, true)})
    for (Index i = 0; i < 3; ++i) EXPECT_TRUE(u.contains(i, i));
  EXPECT_THROW(Relation(s, {{0, 3}}), Error);
}

TEST(Relation, Inverse) {
  auto s = make_space(3);
  EXPECT_EQ(pair_set(relation_inverse(Relation(s, {{0, 1}}))), with_diagonal(3, {{1, 0}}));
  const auto sym = graph_relation({{0, 1}, {1, 2}}, s, false);
  EXPECT_EQ(relation_inverse(sym), sym);
  EXPECT_EQ(relation_inverse(Relation::diagonal(s)), Relation::diagonal(s));
}

TEST(Relation, Image) {
  auto s = make_space(4);
  EXPECT_EQ(relation_image(Relation(s, {{0, 1}, {1, 0}}), {0}), (IndexSet{0, 1}));
  EXPECT_EQ(relation_image(Relation::diagonal(s), {1, 3}), (IndexSet{1, 3}));
  EXPECT_EQ(relation_image(oracle::path(4), {1}), (IndexSet{0, 1, 2}));
  EXPECT_THROW(relation_image(Relation::diagonal(s), {4}), Error);
}

TEST(Relation, Intersect) {
  auto s = make_space(2);
  const Relation u(s, {{0, 1}}), v(s, {{1, 0}});
  EXPECT_EQ(relation_intersect(u, u), u);
  EXPECT_EQ(relation_intersect(u, Relation::diagonal(s)), Relation::diagonal(s));
  EXPECT_EQ(relation_intersect(u, v), Relation::diagonal(s));
  const auto d = oracle::unit_square();
  EXPECT_EQ(relation_intersect(metric_relation(d, 1, ScaleMode::closed), metric_relation(d, std::sqrt(2.0), ScaleMode::closed)),
            metric_relation(d, 1, ScaleMode::closed));
  EXPECT_THROW(relation_intersect(u, Relation::diagonal(make_space(3))), Error);
}

TEST(Relation, SymmetricPart) {
  auto s = make_space(3);
  EXPECT_EQ(symmetric_part(Relation(s, {{0, 1}})), Relation::diagonal(s));
  const auto sym = graph_relation({{0, 2}}, s, false);
  EXPECT_EQ(symmetric_part(sym), sym);
  EXPECT_EQ(pair_set(symmetric_part(Relation(s, {{0, 1}, {1, 0}, {1, 2}}))), with_diagonal(3, {{0, 1}, {1, 0}}));
}

TEST(Relation, MetricRelationOnTheSquare) {
  const auto d = oracle::unit_square();
  const auto closed = metric_relation(d, 1, ScaleMode::closed);
  EXPECT_EQ(closed.pair_count(), 4u + 8u);
  EXPECT_FALSE(closed.contains(0, 2));
  EXPECT_EQ(metric_relation(d, 1, ScaleMode::strict), Relation::diagonal(d.space()));
  EXPECT_THROW(metric_relation(d, -0.5, ScaleMode::closed), Error);
}

TEST(Relation, ShiftedMetric) {
  auto s = make_space(2);
  const SemiPseudometric d(s, {0, 3, 3, 0});
  EXPECT_EQ(shifted_metric(d, 1)(0, 1), 2.0);
  EXPECT_EQ(shifted_metric(d, 5)(0, 1), 0.0);
  for (double r : {0.5, 2.0, 2.5})
    EXPECT_EQ(metric_relation(shifted_metric(d, 1), r, ScaleMode::strict), metric_relation(d, 1 + r, ScaleMode::strict));
}

TEST(Relation, MetricValidation) {
  auto s = make_space(2);
  EXPECT_THROW(SemiPseudometric(s, {0.1, 1, 1, 0}), Error);
  EXPECT_THROW(SemiPseudometric(s, {0, 1, 2, 0}), Error);
  EXPECT_THROW(SemiPseudometric(s, {0, -1, -1, 0}), Error);
  EXPECT_NO_THROW(SemiPseudometric(s, {0, 0, 0, 0}));
}

TEST(Relation, GraphRelation) {
  auto s = make_space(3);
  EXPECT_EQ(graph_relation({{0, 1}, {1, 2}, {0, 2}}, s, false), Relation::full(s));
  EXPECT_EQ(graph_relation({}, s, false), Relation::diagonal(s));
  EXPECT_EQ(pair_set(graph_relation({{0, 1}}, s, true)), with_diagonal(3, {{0, 1}}));
  EXPECT_THROW(graph_relation({{0, 5}}, s, false), Error);
}

TEST(Relation, ProductRelation) {
  auto x = make_space(2), y = make_space(3);
  EXPECT_EQ(product_relation(Relation::diagonal(x), Relation::diagonal(y)),
            Relation::diagonal(product_space(x, y)));
  EXPECT_EQ(product_relation(Relation::full(x), Relation::full(y)), Relation::full(product_space(x, y)));
  const auto mixed = product_relation(Relation::full(x), Relation::diagonal(make_space(2)));
  EXPECT_EQ(mixed.pair_count(), 8u);
  EXPECT_TRUE(mixed.contains(0, 2));   // (0,0) ~ (1,0)
  EXPECT_FALSE(mixed.contains(0, 3));  // (0,0) !~ (1,1)
}

TEST(Relation, Relativize) {
  const auto d = oracle::unit_square();
  const auto u = metric_relation(d, 1, ScaleMode::closed);
  EXPECT_EQ(pair_set(relativize(u, all_points(d.space()))), pair_set(u));
  const auto edge = relativize(u, {0, 1});
  EXPECT_EQ(pair_set(edge), with_diagonal(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(edge.space()->label(1), "b");
  EXPECT_EQ(pair_set(relativize(Relation::diagonal(d.space()), {1, 3})), with_diagonal(2, {}));
  EXPECT_THROW(relativize(u, {}), Error);
}

TEST(SemiUniformBase, ClosesUnderIntersection) {
  auto s = make_space(3);
  const auto a = graph_relation({{0, 1}, {1, 2}}, s, false);
  const auto b = graph_relation({{0, 1}, {0, 2}}, s, false);
  const SemiUniformBase base(s, {a, b});
  EXPECT_EQ(base.size(), 3u);
  ASSERT_TRUE(base.minimum().has_value());
  EXPECT_EQ(base[*base.minimum()], graph_relation({{0, 1}}, s, false));
}

TEST(SemiUniformBase, InverseAxiom) {
  auto s = make_space(2);
  EXPECT_THROW(SemiUniformBase::single(Relation(s, {{0, 1}})), Error);
  EXPECT_NO_THROW(SemiUniformBase(s, {Relation(s, {{0, 1}}), Relation::diagonal(s)}));
  EXPECT_THROW(SemiUniformBase(s, {}), Error);
}

TEST(SemiUniformBase, ScaleBaseOnTheSquare) {
  const auto d = oracle::unit_square();
  const auto base = scale_base(d, 1, {0.2, 0.3});
  EXPECT_EQ(base.size(), 1u);  // both members coincide
  EXPECT_EQ(base[0], metric_relation(d, 1, ScaleMode::closed));
  const auto wide = scale_base(d, 1, {0.5, 0.2});
  EXPECT_EQ(wide.size(), 2u);
  EXPECT_EQ(wide.minimum(), 1u);
  EXPECT_EQ(scale_base(d, 3, {0.1})[0], Relation::full(d.space()));
  EXPECT_EQ(scale_base(d, 0, {0.1})[0], Relation::diagonal(d.space()));
  EXPECT_THROW(scale_base(d, 1, {}), Error);
  EXPECT_THROW(scale_base(d, 1, {0.0}), Error);
}

TEST(SemiUniformBase, ScaleBaseMembersNestAndStabilize) {
  gen::Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto d = gen::random_metric(rng, make_space(gen::uniform_count(rng, 2, 7)));
    const double q = static_cast<double>(gen::uniform_count(rng, 0, 8)) / 4.0;
    const double gap = smallest_gap(d, {q}).value_or(1.0);
    const std::vector<double> deltas{gap / 4, gap / 2, gap, 2 * gap, 1.0};
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i)
      EXPECT_TRUE(metric_relation(d, q + deltas[i], ScaleMode::strict)
                      .is_subset_of(metric_relation(d, q + deltas[i + 1], ScaleMode::strict)));
    EXPECT_EQ(metric_relation(d, q + gap / 2, ScaleMode::strict), metric_relation(d, q, ScaleMode::closed));
    const auto base = scale_base(d, q, deltas);
    ASSERT_TRUE(base.minimum().has_value());
    EXPECT_EQ(base[*base.minimum()], metric_relation(d, q, ScaleMode::closed));
  }
}

TEST(Relation, StrictClosedChain) {
  gen::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto d = gen::random_metric(rng, make_space(gen::uniform_count(rng, 1, 7)));
    const double q = static_cast<double>(gen::uniform_count(rng, 0, 8)) / 4.0;
    const auto strict = metric_relation(d, q, ScaleMode::strict);
    const auto closed = metric_relation(d, q, ScaleMode::closed);
    EXPECT_TRUE(strict.is_subset_of(closed));
    EXPECT_TRUE(closed.is_subset_of(metric_relation(d, q + 0.01, ScaleMode::strict)));
    EXPECT_EQ(relation_inverse(relation_inverse(strict)), strict);
  }
}

TEST(Relation, ImageIsMonotone) {
  gen::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = gen::uniform_count(rng, 1, 7);
    auto s = make_space(n);
    const auto u = Relation::from_predicate(s, [&](Index, Index) { return gen::coin(rng, 0.3); });
    const auto bigger = relation_intersect(Relation::full(s), Relation::from_predicate(s, [&](Index i, Index j) {
                                             return u.contains(i, j) || gen::coin(rng, 0.3);
                                           }));
    const auto a = gen::random_subset(rng, n, 0.4);
    IndexSet b = a;
    b.merge(gen::random_subset(rng, n, 0.3));
    EXPECT_TRUE(is_subset(relation_image(u, a), relation_image(u, b)));
    EXPECT_TRUE(is_subset(relation_image(u, a), relation_image(bigger, a)));
    EXPECT_TRUE(is_subset(a, relation_image(u, a)));
    EXPECT_EQ(symmetric_part(u), relation_inverse(symmetric_part(u)));
  }
}

TEST(Continuity, UniformContinuityExamples) {
  auto s = make_space(2);
  const SemiPseudometric d(s, {0, 1, 1, 0});
  const auto b1 = SemiUniformBase::single(metric_relation(d, 1, ScaleMode::closed));
  const auto bhalf = SemiUniformBase::single(metric_relation(d, 0.5, ScaleMode::closed));
  EXPECT_TRUE(check_uniform_continuity({0, 1}, b1, b1).continuous);
  EXPECT_TRUE(check_uniform_continuity({0, 0}, b1, bhalf).continuous);
  const auto v = check_uniform_continuity({0, 1}, b1, bhalf);
  EXPECT_FALSE(v.continuous);
  ASSERT_EQ(v.witnesses.size(), 1u);
  const auto [i, j] = v.witnesses[0].pair;
  EXPECT_EQ(std::min(i, j), 0u);
  EXPECT_EQ(std::max(i, j), 1u);
}

TEST(Continuity, PqExamples) {
  auto s = make_space(2);
  const SemiPseudometric d(s, {0, 1, 1, 0});
  EXPECT_TRUE(check_pq_continuity({0, 1}, d, d, 1, 1).continuous);
  EXPECT_FALSE(check_pq_continuity({0, 1}, d, d, 1, 0.5).continuous);
  const auto sq = oracle::unit_square();
  const SemiPseudometric point(make_space(1), {0});
  EXPECT_TRUE(check_pq_continuity({0, 0, 0, 0}, sq, point, 0.3, 0).continuous);
  EXPECT_THROW(check_pq_continuity({0, 1}, d, d, -1, 1), Error);
}

TEST(Continuity, PqAgreesWithBaseDefinition) {
  gen::Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto dx = gen::random_metric(rng, make_space(gen::uniform_count(rng, 1, 5)));
    const auto dy = gen::random_metric(rng, make_space(gen::uniform_count(rng, 1, 5)));
    VertexMap f(dx.size());
    for (auto& v : f) v = gen::uniform_count(rng, 0, dy.size() - 1);
    const double p = static_cast<double>(gen::uniform_count(rng, 0, 8)) / 4.0;
    const double q = static_cast<double>(gen::uniform_count(rng, 0, 8)) / 4.0;
    const double delta = std::min(smallest_gap(dx, {p, q}).value_or(1.0), smallest_gap(dy, {p, q}).value_or(1.0)) / 2.0;
    const bool by_base =
        check_uniform_continuity(f, scale_base(dx, p, {delta}), scale_base(dy, q, {delta})).continuous;
    EXPECT_EQ(check_pq_continuity(f, dx, dy, p, q).continuous, by_base);
  }
}
