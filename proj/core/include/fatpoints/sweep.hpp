#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fatpoints/classes.hpp"
#include "fatpoints/oracle.hpp"

namespace fatpoints {

/// Every normalized system (d; m1 >= ... >= mr > 0) with 0 <= d <= dmax,
/// r <= points and m1 <= mmax, ordered by degree then by the padded
/// multiplicity tuple in descending lexicographic order.
std::vector<SystemP3> canonical_systems(Int dmax, std::size_t points, Int mmax);

/// `count` reproducible random systems: d uniform in [0, dmax], r uniform in
/// [1, points], each multiplicity uniform in [0, mmax]. Multiplicities are
/// left unsorted.
std::vector<SystemP3> random_systems(std::size_t count, Int dmax, Int mmax, std::size_t points,
                                     std::uint64_t seed);

/// Runs body(i) for i in [0, n) on up to `jobs` threads (0 = hardware
/// concurrency). The first exception thrown by any task is rethrown.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

struct VerifyRow {
  SystemP3 system;
  Int fast_dim = 0;
  Int oracle_dim = 0;

  bool match() const noexcept { return fast_dim == oracle_dim; }
};

/// full_dim against oracle_dim_p3 for every system, rows in input order.
std::vector<VerifyRow> cross_validate(std::span<const SystemP3> systems, const OracleConfig& cfg,
                                      unsigned jobs = 0);

}  // namespace fatpoints
