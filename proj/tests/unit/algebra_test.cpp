#include <gtest/gtest.h>

#include "bridge.hpp"
#include "vrhom/generate.hpp"

using namespace vrhom;

namespace {

IntegerMatrix random_matrix(gen::Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi, double zero_p = 0.0) {
  IntegerMatrix m(rows, cols);
  std::uniform_int_distribution<int> entry(lo, hi);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gen::coin(rng, zero_p) ? 0 : entry(rng);
  return m;
}

oracle::DenseZ dense(const IntegerMatrix& m) {
  oracle::DenseZ out(m.rows(), std::vector<oracle::Big>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

void expect_valid_snf(const IntegerMatrix& m, const SNFResult& r) {
  ASSERT_EQ(r.d.size(), std::min(m.rows(), m.cols()));
  IntegerMatrix diag(m.rows(), m.cols());
  for (std::size_t i = 0; i < r.d.size(); ++i) diag(i, i) = r.d[i];
  EXPECT_EQ(r.left * m * r.right, diag);
  EXPECT_EQ(abs(oracle::det(dense(r.left))), 1);
  EXPECT_EQ(abs(oracle::det(dense(r.right))), 1);
  for (std::size_t i = 0; i < r.d.size(); ++i) {
    EXPECT_GE(r.d[i], 0);
    if (i + 1 < r.d.size()) {
      if (r.d[i] == 0) {
        EXPECT_EQ(r.d[i + 1], 0);
      } else {
        EXPECT_EQ(r.d[i + 1] % r.d[i], 0);
      }
    }
  }
}

std::vector<BigInt> nonzero(const std::vector<BigInt>& d) {
  std::vector<BigInt> out;
  for (const auto& v : d)
    if (v != 0) out.push_back(v);
  return out;
}

}  // namespace

TEST(Smith, SpecExamples) {
  const IntegerMatrix m{{2, 0}, {0, 3}};
  const auto r = smith_normal_form(m);
  EXPECT_EQ(r.d, (std::vector<BigInt>{1, 6}));
  expect_valid_snf(m, r);
  EXPECT_EQ(smith_diagonal(IntegerMatrix(3, 2)), (std::vector<BigInt>{0, 0}));
  EXPECT_EQ(smith_diagonal(IntegerMatrix::identity(4)), (std::vector<BigInt>{1, 1, 1, 1}));
}

TEST(Smith, DeterminantalDivisorOracle) {
  gen::Rng rng(71);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(rng, gen::uniform_count(rng, 1, 5), gen::uniform_count(rng, 1, 5), -9, 9, 0.3);
    const auto r = smith_normal_form(m);
    expect_valid_snf(m, r);
    std::vector<BigInt> expected;
    for (const auto& f : oracle::invariant_factors(dense(m))) expected.push_back(f);
    EXPECT_EQ(nonzero(r.d), expected);
  }
}

TEST(Smith, LargerRandomMatrices) {
  gen::Rng rng(73);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, gen::uniform_count(rng, 1, 12), gen::uniform_count(rng, 1, 12), -9, 9, 0.5);
    expect_valid_snf(m, smith_normal_form(m));
  }
}

TEST(Smith, TorsionOfProjectivePlaneBoundary) {
  const auto k = SimplicialComplex::from_maximal(make_space(6), oracle::rp2_triangles());
  const auto d2 = boundary_matrices(k).at(2);
  ASSERT_EQ(d2.rows(), 15u);
  ASSERT_EQ(d2.cols(), 10u);
  const auto r = smith_normal_form(d2);
  expect_valid_snf(d2, r);
  EXPECT_EQ(r.torsion(), (std::vector<BigInt>{2}));
  const auto factors = oracle::invariant_factors(dense(d2));
  ASSERT_EQ(factors.size(), 10u);
  EXPECT_EQ(factors.back(), 2);
}

TEST(Matrix, DeterminantAgreesWithOracle) {
  gen::Rng rng(79);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = gen::uniform_count(rng, 1, 7);
    const auto m = random_matrix(rng, n, n, -5, 5, 0.2);
    EXPECT_EQ(determinant(m), oracle::det(dense(m)));
  }
  EXPECT_THROW(determinant(IntegerMatrix(2, 3)), Error);
}

TEST(Matrix, ProductAndTranspose) {
  const IntegerMatrix a{{1, 2}, {3, 4}};
  const IntegerMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntegerMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (IntegerMatrix{{1, 3}, {2, 4}}));
  EXPECT_THROW(a * IntegerMatrix(3, 1), Error);
}

TEST(Field, PrimeFieldArithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.mul(f.inv(3), 3), f.one());
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.from_rational(Rational(1, 2)), 4u);
  EXPECT_THROW(PrimeField(8), Error);
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(1));
}

TEST(Field, CoefficientParsing) {
  EXPECT_EQ(Coefficients::parse("z"), Coefficients::integers());
  EXPECT_EQ(Coefficients::parse("q"), Coefficients::rationals());
  EXPECT_EQ(Coefficients::parse("zp:5"), Coefficients::prime_field(5));
  EXPECT_EQ(Coefficients::parse("zp:5").to_string(), "zp:5");
  EXPECT_THROW(Coefficients::parse("zp:4"), Error);
  EXPECT_THROW(Coefficients::parse("zp:"), Error);
  EXPECT_THROW(Coefficients::parse("r"), Error);
  EXPECT_THROW(visit_field(Coefficients::integers(), [](const auto&) { return 0; }), Error);
}

TEST(Field, RankAgreesWithOracle) {
  gen::Rng rng(83);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(rng, gen::uniform_count(rng, 1, 8), gen::uniform_count(rng, 1, 8), -2, 2, 0.4);
    oracle::DenseQ q(m.rows(), std::vector<oracle::Q>(m.cols()));
    Matrix<Rational> mq(m.rows(), m.cols());
    Matrix<std::uint64_t> m3(m.rows(), m.cols());
    const PrimeField f3(3);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        q[i][j] = oracle::Q(m(i, j));
        mq(i, j) = Rational(m(i, j));
        m3(i, j) = f3.from_int(static_cast<long long>(m(i, j)));
      }
    EXPECT_EQ(field_rank(RationalField{}, mq), oracle::rank(q));
    EXPECT_EQ(field_rank(f3, m3), oracle::rank(q, 3));
  }
}

TEST(Sparse, ReducerTracksCombinations) {
  const RationalField f;
  ColumnReducer<RationalField> reducer(f);
  reducer.insert({{0, Rational(1)}, {1, Rational(1)}}, 0);
  reducer.insert({{1, Rational(2)}}, 1);
  const auto r = reducer.reduce({{0, Rational(3)}, {1, Rational(5)}});
  EXPECT_TRUE(r.residual.empty());
  // 3·(e0 + e1) + 1·(2 e1) = 3 e0 + 5 e1
  ASSERT_EQ(r.combination.size(), 2u);
  EXPECT_EQ(r.combination[0].second, Rational(3));
  EXPECT_EQ(r.combination[1].second, Rational(1));
  EXPECT_EQ(reducer.rank(), 2u);
}
