#include <set>

#include "support.hpp"

namespace fatpoints {
namespace {

using test::cfg;
using test::plane;
using test::sys;

TEST(Oracle, P3Examples) {
  const auto c = cfg();
  EXPECT_EQ(oracle_dim_p3(sys(3, {3, 3, 3}), c), 0);
  EXPECT_EQ(oracle_dim_p3(sys(1, {1, 1}), c), 1);
  EXPECT_EQ(oracle_dim_p3(sys(4, {3, 3}), c), 15);
  EXPECT_EQ(oracle_dim_p3(sys(2, std::vector<Int>(8, 1)), c), 1);
  EXPECT_EQ(oracle_dim_p3(sys(-1, {1}), c), -1);
  EXPECT_EQ(oracle_dim_p3(sys(0), c), 0);
}

TEST(Oracle, PlaneExamples) {
  const auto c = cfg();
  EXPECT_EQ(oracle_dim_p2(plane(2, {1, 1, 1, 1, 1}), c), 0);
  EXPECT_EQ(oracle_dim_p2(plane(2, {2, 2}), c), 0);
  EXPECT_EQ(oracle_dim_p2(plane(4, {2, 2, 2, 2, 2}), c), 0);
}

TEST(Oracle, QuadricExamples) {
  const auto c = cfg();
  EXPECT_EQ(oracle_dim_quadric({1, 1, {}}, c), 3);
  EXPECT_EQ(oracle_dim_quadric({1, 1, {1}}, c), 2);
  EXPECT_EQ(oracle_dim_quadric({2, 2, std::vector<Int>(8, 1)}, c), 0);
  EXPECT_EQ(oracle_dim_quadric({1, 0, {2}}, c), -1);
}

TEST(Oracle, ShapeMatchesVirtualDimension) {
  for (const auto& s : canonical_systems(9, 8, 6)) {
    const auto shape = condition_shape_p3(s);
    EXPECT_EQ(static_cast<Int>(shape.cols) - static_cast<Int>(shape.rows) - 1, vdim_p3(s)) << s;
    const PlaneSystem p{s.degree, s.mults};
    const auto pshape = condition_shape_p2(p);
    EXPECT_EQ(static_cast<Int>(pshape.cols) - static_cast<Int>(pshape.rows) - 1, vdim_p2(p)) << s;
    const QuadricSystem q{s.degree, s.degree / 2, s.mults};
    const auto qshape = condition_shape_quadric(q);
    EXPECT_EQ(static_cast<Int>(qshape.cols) - static_cast<Int>(qshape.rows) - 1, vdim_quadric(q)) << s;
  }
}

TEST(Oracle, MatrixMatchesShape) {
  const auto s = sys(4, {3, 2, 1});
  const std::vector<AffinePoint3> pts{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  const auto m = build_condition_matrix_p3(s, pts, 1000000007);
  EXPECT_EQ(m.rows, condition_shape_p3(s).rows);
  EXPECT_EQ(m.cols, condition_shape_p3(s).cols);
  EXPECT_EQ(m.entries.size(), m.rows * m.cols);
  EXPECT_ERRC(build_condition_matrix_p3(s, std::span(pts).first(2), 1000000007), Errc::precondition_failed);
}

TEST(Oracle, SimplePointRowIsMonomialEvaluation) {
  const std::vector<AffinePoint2> pts{{3, 5}};
  const auto m = build_condition_matrix_p2(plane(2, {1}), pts, 101);
  ASSERT_EQ(m.rows, 1u);
  std::multiset<std::uint64_t> got(m.entries.begin(), m.entries.end());
  const std::multiset<std::uint64_t> expected{1, 3, 5, 9, 15, 25};
  EXPECT_EQ(got, expected);
}

TEST(Oracle, PermutationInvariant) {
  std::mt19937_64 rng(47);
  const auto c = cfg(5);
  for (int i = 0; i < 300; ++i) {
    auto s = test::random_raw<SurfaceTag>(rng, 0, 6);
    const Int dim = oracle_dim_p3(s, c);
    std::shuffle(s.mults.begin(), s.mults.end(), rng);
    EXPECT_EQ(oracle_dim_p3(s, c), dim) << s;
    EXPECT_EQ(oracle_dim_p3(normalize(s), c), dim) << s;
  }
}

TEST(Oracle, DeterministicAndSeeded) {
  auto c = cfg(99);
  const auto a = oracle_p3(sys(6, {3, 3, 2, 2, 2}), c);
  const auto b = oracle_p3(sys(6, {3, 3, 2, 2, 2}), c);
  EXPECT_EQ(a.primes, b.primes);
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_EQ(a.primes.size(), 2u);
  EXPECT_NE(a.primes[0], a.primes[1]);
  for (auto p : a.primes) {
    EXPECT_TRUE(is_prime_u64(p));
    EXPECT_GE(p, std::uint64_t{1} << 50);
  }
  c.seed = 100;
  EXPECT_NE(sample_primes(c), a.primes);
}

TEST(Oracle, EarlyStopAtFullRank) {
  auto c = cfg();
  c.samples = 4;
  const auto full = oracle_p3(sys(2, std::vector<Int>(8, 1)), c);
  EXPECT_EQ(full.samples_run, 1);
  EXPECT_EQ(full.primes.size(), 4u);
}

TEST(Oracle, Errors) {
  auto c = cfg();
  c.max_side = 50;
  EXPECT_ERRC(oracle_p3(sys(10, {2}), c), Errc::size_limit_exceeded);
  c = cfg();
  c.prime_bits = 40;
  EXPECT_ERRC(oracle_p3(sys(1), c), Errc::invalid_config);
  c = cfg();
  c.samples = 0;
  EXPECT_ERRC(c.validate(), Errc::invalid_config);
}

TEST(Oracle, NegativeMultiplicitiesImposeNothing) {
  const auto c = cfg();
  EXPECT_EQ(oracle_dim_p2(plane(1, {-1, -1}), c), 2);
  EXPECT_EQ(oracle_dim_p3(sys(3, {2, -1, 1}), c), oracle_dim_p3(sys(3, {2, 1}), c));
}

}  // namespace
}  // namespace fatpoints
