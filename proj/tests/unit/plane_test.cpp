#include "support.hpp"

namespace fatpoints {
namespace {

using test::plane;

TEST(PlaneCremona, Examples) {
  EXPECT_EQ(p2_cremona(plane(7, {3, 3, 2, 2})), plane(6, {2, 2, 1, 2}));
  EXPECT_EQ(p2_cremona(plane(3, {1, 1, 1})), plane(3, {1, 1, 1}));
  EXPECT_EQ(p2_cremona(plane(2, {1, 1, 1})), plane(1, {0, 0, 0}));
  EXPECT_EQ(p2_cremona(plane(2, {1})), plane(3, {2, 1, 1}));
}

TEST(PlaneCremona, InvolutionAndVdim) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 5000; ++i) {
    const auto s = padded(test::random_raw<PlaneTag>(rng, 0, 20, 9), 3);
    EXPECT_EQ(p2_cremona(p2_cremona(s)), s);
    bool nonneg = true;
    for (Int m : p2_cremona(s).mults) nonneg = nonneg && m >= 0;
    if (nonneg) {
      EXPECT_EQ(vdim_p2(p2_cremona(s)), vdim_p2(s)) << s;
    }
  }
}

TEST(PlaneStandardize, Examples) {
  const auto a = p2_standardize(plane(7, {3, 3, 2, 2}));
  EXPECT_FALSE(a.empty);
  EXPECT_EQ(a.terminal, plane(6, {2, 2, 2, 1}));

  const auto b = p2_standardize(plane(2, {2, 2}));
  EXPECT_FALSE(b.empty);
  EXPECT_TRUE(same_class(b.terminal, plane(0)));

  const auto c = p2_standardize(plane(3, std::vector<Int>(9, 1)));
  EXPECT_EQ(c.terminal, plane(3, std::vector<Int>(9, 1)));
  EXPECT_TRUE(c.steps.empty());

  EXPECT_TRUE(p2_standardize(plane(1, {2, 2})).empty);
  EXPECT_ERRC(p2_standardize(plane(3, std::vector<Int>(11, 1))), Errc::too_many_points);
}

TEST(PlaneFacts, Examples) {
  const auto a = p2_nonspecial_facts(plane(6, {2, 2, 2, 1}));
  EXPECT_TRUE(a.nonempty);
  EXPECT_EQ(a.h1, H1Vanishing::certified);
  EXPECT_EQ(p2_nonspecial_facts(plane(3, std::vector<Int>(9, 1))).h1, H1Vanishing::certified);
  EXPECT_EQ(p2_nonspecial_facts(plane(3, std::vector<Int>(10, 1))).h1, H1Vanishing::unknown);
  EXPECT_ERRC(p2_nonspecial_facts(plane(10, {5, 5, 5, 5, 5, 5})), Errc::not_standard_form);
}

TEST(PlaneFacts, AgreeWithOracle) {
  const auto c = test::cfg(31);
  std::size_t certified = 0;
  for (Int d = 0; d <= 7; ++d) {
    for (const auto& s3 : canonical_systems(d, 7, d)) {
      if (s3.degree != d) continue;
      const PlaneSystem s{s3.degree, s3.mults};
      if (!is_standard_plane(s)) continue;
      const auto facts = p2_nonspecial_facts(s);
      const Int dim = oracle_dim_p2(s, c);
      EXPECT_GE(dim, 0) << s;
      if (facts.h1 == H1Vanishing::certified) {
        EXPECT_EQ(dim, vdim_p2(s)) << s;
        ++certified;
      }
    }
  }
  EXPECT_GT(certified, 100u);
}

TEST(PlaneStandardize, PreservesOracleDimension) {
  const auto c = test::cfg(37);
  for (Int d = 0; d <= 6; ++d) {
    for (const auto& s3 : canonical_systems(d, 6, d + 1)) {
      if (s3.degree != d) continue;
      const PlaneSystem s{s3.degree, s3.mults};
      const auto red = p2_standardize(s);
      const Int expected = red.empty ? -1 : oracle_dim_p2(red.terminal, c);
      EXPECT_EQ(oracle_dim_p2(s, c), expected) << s;
    }
  }
}

}  // namespace
}  // namespace fatpoints
