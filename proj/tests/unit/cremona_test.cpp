#include "support.hpp"

namespace fatpoints {
namespace {

using test::curve;
using test::sys;

TEST(CremonaPoint, Examples) {
  EXPECT_EQ(cremona_point({1, 1, 1, 1}), (ProjectivePoint{1, 1, 1, 1}));
  EXPECT_EQ(cremona_point({1, 2, 2, 2}), (ProjectivePoint{2, 1, 1, 1}));
  EXPECT_EQ(cremona_point({1, 1, 1, 0}), (ProjectivePoint{0, 0, 0, 1}));
}

TEST(CremonaPoint, IndeterminacyAndZero) {
  EXPECT_ERRC(cremona_point({1, 1, 0, 0}), Errc::indeterminate_point);
  EXPECT_ERRC(cremona_point({0, 0, 0, 1}), Errc::indeterminate_point);
  EXPECT_ERRC(primitive({0, 0, 0, 0}), Errc::precondition_failed);
}

TEST(CremonaPoint, InvolutionOffCoordinatePlanes) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> v(-20, 20);
  int checked = 0;
  while (checked < 5000) {
    const ProjectivePoint x{v(rng), v(rng), v(rng), v(rng)};
    if (x[0] == 0 || x[1] == 0 || x[2] == 0 || x[3] == 0) continue;
    EXPECT_TRUE(projectively_equal(cremona_point(cremona_point(x)), x));
    ++checked;
  }
  EXPECT_TRUE(projectively_equal({2, 4, 6, 8}, {-1, -2, -3, -4}));
  EXPECT_FALSE(projectively_equal({1, 2, 3, 4}, {1, 2, 3, 5}));
}

TEST(CremonaDivisor, Examples) {
  EXPECT_EQ(cremona_divisor(sys(3, {2, 2, 2, 2})), sys(1, {0, 0, 0, 0}));
  EXPECT_EQ(cremona_divisor(sys(2, {1, 1, 1, 1})), sys(2, {1, 1, 1, 1}));
  EXPECT_EQ(cremona_divisor(sys(4, {3, 3, 2, 2})), sys(2, {1, 1, 0, 0}));
  EXPECT_EQ(cremona_divisor(sys(1, {1})), sys(2, {2, 1, 1, 1}));
  EXPECT_EQ(cremona_increment(sys(4, {3, 3, 2, 2, 1})), -2);
}

TEST(CremonaCurve, Examples) {
  EXPECT_EQ(cremona_curve(curve(1, {0, 0, 0, 0, 1, 1})), curve(3, {1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(cremona_curve(curve(1, {1, 1, 0, 0})), curve(-1, {0, 0, -1, -1}));
  EXPECT_TRUE(same_class(cremona_curve(curve(0)), curve(0)));
}

TEST(Cremona, InvolutionsAndPairing) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const auto s = padded(test::random_raw<SurfaceTag>(rng, -10, 30), 8);
    const auto c = padded(test::random_raw<CurveTag>(rng, -10, 30), 8);
    EXPECT_EQ(cremona_divisor(cremona_divisor(s)), s);
    EXPECT_EQ(cremona_curve(cremona_curve(c)), c);
    EXPECT_EQ(pair(cremona_curve(c), cremona_divisor(s)), pair(c, s));
  }
}

TEST(Cremona, AnticanonicalClassIsFixed) {
  for (std::size_t r = 4; r <= 8; ++r) {
    const SystemP3 minus_half_k{2, std::vector<Int>(r, 1)};
    EXPECT_EQ(cremona_divisor(minus_half_k), minus_half_k);
  }
}

TEST(VdimChange, Examples) {
  EXPECT_EQ(vdim_change(sys(4, {3, 3, 2, 2})), 1);
  EXPECT_EQ(vdim_change(sys(2, {1, 1, 1, 1})), 0);
  EXPECT_EQ(vdim_change(sys(6, {4, 4, 4, 0})), 0);
  EXPECT_ERRC(vdim_change(sys(3, {3, 3, 3, 0})), Errc::hypothesis_violated);
  EXPECT_FALSE(vdim_change_hypothesis(sys(3, {3, 3, 3})));
}

TEST(VdimChange, IdentityOnRandomSystems) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> deg(0, 40);
  int checked = 0;
  while (checked < 10000) {
    const Int d = deg(rng);
    std::uniform_int_distribution<Int> mult(0, d);
    SystemP3 s{d, std::vector<Int>(1 + rng() % 8)};
    for (auto& m : s.mults) m = mult(rng);
    if (!vdim_change_hypothesis(s)) continue;
    ASSERT_EQ(vdim_p3(cremona_divisor(s)) - vdim_p3(s), vdim_change(s)) << s;
    EXPECT_TRUE(corollary_monotone(s)) << s;
    ++checked;
  }
}

TEST(Corollary, Examples) {
  EXPECT_TRUE(corollary_monotone(sys(4, {3, 3, 2, 2})));
  EXPECT_TRUE(corollary_monotone(sys(2, {1, 1, 1, 1})));
  EXPECT_TRUE(corollary_monotone(sys(3, {2, 2, 2, 2})));
  EXPECT_ERRC(corollary_monotone(sys(1, {1, 1, 1})), Errc::hypothesis_violated);
}

}  // namespace
}  // namespace fatpoints
