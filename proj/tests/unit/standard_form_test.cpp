#include "support.hpp"

namespace fatpoints {
namespace {

using test::sys;

TEST(StandardForm, IsStandard) {
  EXPECT_TRUE(is_standard(sys(4, {3, 3, 2})));
  EXPECT_FALSE(is_standard(sys(3, {3, 3, 3})));
  EXPECT_TRUE(is_standard(sys(0)));
  EXPECT_FALSE(is_standard(sys(4, {2, 3})));
  EXPECT_EQ(standard_class(3), sys(2, {1, 1, 1}));
}

TEST(Decompose, Examples) {
  const auto a = decompose(sys(4, {2, 2, 2, 2, 1}));
  EXPECT_EQ(a.base, sys(0, {0, 0, 0}));
  EXPECT_EQ(a.coefficients, (std::map<std::size_t, Int>{{4, 1}, {5, 1}}));

  const auto b = decompose(sys(2, {1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(same_class(b.base, sys(0)));
  EXPECT_EQ(b.coefficients.at(8), 1);
  for (std::size_t i = 4; i < 8; ++i) EXPECT_EQ(b.coefficients.at(i), 0);

  const auto c = decompose(sys(5, {2, 1}));
  EXPECT_EQ(c.base, sys(5, {2, 1}));
  EXPECT_TRUE(c.coefficients.empty());
}

TEST(Decompose, Errors) {
  EXPECT_ERRC(decompose(sys(3, {3, 3, 3})), Errc::not_standard_form);
  EXPECT_ERRC(decompose(sys(4, {2, 1, 0})), Errc::precondition_failed);
}

TEST(Decompose, RoundTripAndPartialSums) {
  std::size_t checked = 0;
  for (const auto& s : canonical_systems(14, 8, 7)) {
    if (!is_standard(s)) continue;
    const auto dec = decompose(s);
    ASSERT_TRUE(same_class(dec.recompose(), s)) << s;
    EXPECT_TRUE(is_standard(dec.base)) << s;
    for (const auto& [i, c] : dec.coefficients) EXPECT_GE(c, 0) << s;
    // Multiplicity at point j >= 4 is the tail sum of the coefficients.
    for (std::size_t j = 4; j <= s.points(); ++j) {
      Int tail = 0;
      for (const auto& [i, c] : dec.coefficients) tail += i >= j ? c : 0;
      EXPECT_EQ(tail, s.mult(j - 1)) << s;
    }
    ++checked;
  }
  EXPECT_GT(checked, 1000u);
}

TEST(EmptyThree, Examples) {
  EXPECT_TRUE(empty_three(sys(2, {3, 1, 1})));
  EXPECT_FALSE(empty_three(sys(3, {3, 3, 3})));
  EXPECT_FALSE(empty_three(sys(0)));
  EXPECT_ERRC(empty_three(sys(5, {1, 1, 1, 1})), Errc::too_many_points);
  EXPECT_FALSE(empty_three(sys(5, {1, 1, 1, 0})));
}

TEST(EmptyThree, AgreesWithOracle) {
  const auto c = test::cfg(3);
  for (const auto& s : canonical_systems(6, 3, 7)) {
    EXPECT_EQ(empty_three(s), oracle_dim_p3(s, c) < 0) << s;
  }
}

}  // namespace
}  // namespace fatpoints
