#pragma once

#include <random>

#include <gtest/gtest.h>

#include "fatpoints/fatpoints.hpp"

namespace fatpoints::test {

inline SystemP3 sys(Int d, std::vector<Int> m = {}) { return {d, std::move(m)}; }
inline CurveClassP3 curve(Int d, std::vector<Int> m = {}) { return {d, std::move(m)}; }
inline PlaneSystem plane(Int d, std::vector<Int> m = {}) { return {d, std::move(m)}; }

inline OracleConfig cfg(std::uint64_t seed = 1) {
  OracleConfig c;
  c.seed = seed;
  return c;
}

/// Raw class with entries in [lo, hi] and 1..max_points points.
template <class Tag>
PointClass<Tag> random_raw(std::mt19937_64& rng, Int lo, Int hi, std::size_t max_points = 8) {
  std::uniform_int_distribution<Int> v(lo, hi);
  std::uniform_int_distribution<std::size_t> r(1, max_points);
  PointClass<Tag> c;
  c.degree = v(rng);
  c.mults.resize(r(rng));
  for (auto& m : c.mults) m = v(rng);
  return c;
}

#define EXPECT_ERRC(stmt, errc)                                  \
  do {                                                           \
    try {                                                        \
      stmt;                                                      \
      ADD_FAILURE() << "expected " << ::fatpoints::to_string(errc); \
    } catch (const ::fatpoints::Error& e) {                      \
      EXPECT_EQ(e.code(), errc) << e.what();                     \
    }                                                            \
  } while (false)

}  // namespace fatpoints::test
