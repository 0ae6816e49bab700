#include <sstream>

#include "support.hpp"

namespace fatpoints {
namespace {

using test::curve;
using test::plane;
using test::sys;

TEST(Vdim, P3Examples) {
  EXPECT_EQ(vdim_p3(sys(3, {3, 3, 3})), -11);
  EXPECT_EQ(vdim_p3(sys(2, {1, 1, 1, 1, 1, 1, 1, 1})), 1);
  EXPECT_EQ(vdim_p3(sys(0)), 0);
  EXPECT_EQ(vdim_p3(sys(-1)), -1);
}

TEST(Vdim, PlaneAndQuadricExamples) {
  EXPECT_EQ(vdim_p2(plane(3, std::vector<Int>(9, 1))), 0);
  EXPECT_EQ(vdim_p2(plane(1, {2})), -1);
  EXPECT_EQ(vdim_p2(plane(0)), 0);
  EXPECT_EQ(vdim_quadric({1, 1, {1}}), 2);
  EXPECT_EQ(vdim_quadric({2, 2, std::vector<Int>(8, 1)}), 0);
  EXPECT_EQ(vdim_quadric({0, 0, {}}), 0);
}

TEST(Vdim, ZeroAndNegativeMultiplicitiesImposeNothing) {
  EXPECT_EQ(vdim_p3(sys(5, {2, 0, -3})), vdim_p3(sys(5, {2})));
  EXPECT_EQ(vdim_p2(plane(5, {2, 0, -3})), vdim_p2(plane(5, {2})));
}

TEST(Pair, Examples) {
  EXPECT_EQ(pair(curve(1, {1, 1}), sys(3, {3, 3, 3})), -3);
  EXPECT_EQ(pair(curve(3, {1, 1, 1, 1, 1, 1}), sys(3, {1, 1, 1, 1, 1, 1})), 3);
  EXPECT_EQ(pair(curve(1), sys(0)), 0);
  EXPECT_EQ(pair(curve(1, {1, 1, 0, 0, 0, 0}), sys(2, {1, 1})), 0);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(sys(4, {1, 3, 0, -1, 2})), sys(4, {3, 2, 1}));
  EXPECT_EQ(normalize(sys(3, {3, 3, 3})), sys(3, {3, 3, 3}));
  EXPECT_EQ(normalize(sys(2, {0, 0})), sys(2));
  EXPECT_TRUE(is_normalized(sys(3, {3, 3, 3})));
  EXPECT_FALSE(is_normalized(sys(3, {1, 2})));
}

TEST(Normalize, TracksOrderAndClamps) {
  const auto n = normalize_tracked(sys(4, {1, 3, 0, -1, 2, 3}));
  EXPECT_EQ(n.result, sys(4, {3, 3, 2, 1}));
  EXPECT_EQ(n.order, (std::vector<std::size_t>{1, 5, 4, 0}));
  EXPECT_EQ(n.clamped, (std::vector<std::size_t>{3}));
}

TEST(Normalize, IdempotentAndPermutationInvariant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto s = test::random_raw<SurfaceTag>(rng, -3, 9);
    const auto n = normalize(s);
    EXPECT_EQ(normalize(n), n);
    std::shuffle(s.mults.begin(), s.mults.end(), rng);
    EXPECT_EQ(normalize(s), n);
  }
}

TEST(Classes, Arithmetic) {
  EXPECT_EQ(sys(2, {1, 1}) + sys(3, {1, 1, 1, 1}), sys(5, {2, 2, 1, 1}));
  EXPECT_EQ(sys(2, {1}) - sys(1, {1, 1}), sys(1, {0, -1}));
  EXPECT_EQ(3 * sys(2, {1, 1}), sys(6, {3, 3}));
  EXPECT_TRUE(same_class(sys(2, {1, 1, 0, 0}), sys(2, {1, 1})));
  EXPECT_FALSE(same_class(sys(2, {1, 0, 1}), sys(2, {1, 1})));
  EXPECT_EQ(padded(sys(2, {1}), 3), sys(2, {1, 0, 0}));
  EXPECT_EQ(effective_points({2, 0, 1, 0, 0}), 3u);
}

TEST(Classes, Rendering) {
  EXPECT_EQ(to_string(sys(3, {3, 3, 3})), "(3; 3,3,3)");
  EXPECT_EQ(to_string(sys(0)), "(0;)");
  EXPECT_EQ(to_string(QuadricSystem{2, 3, {1}}), "(2,3; 1)");
  std::ostringstream os;
  os << curve(1, {1, 1});
  EXPECT_EQ(os.str(), "(1; 1,1)");
}

}  // namespace
}  // namespace fatpoints
