#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fatpoints/classes.hpp"
#include "fatpoints/modular.hpp"

namespace fatpoints {

/// Controls the randomized exact-rank ground truth.
struct OracleConfig {
  int prime_bits = 59;
  int samples = 2;
  std::uint64_t seed = 0;
  /// Upper bound on both the row and the column count of a condition matrix.
  std::size_t max_side = 20000;

  /// Throws invalid_config unless 50 <= prime_bits <= 62 and samples >= 1.
  void validate() const;
};

/// The distinct primes used by the samples of `cfg`, in sample order.
/// Depends only on (seed, prime_bits, samples).
std::vector<std::uint64_t> sample_primes(const OracleConfig& cfg);

struct MatrixShape {
  std::size_t rows = 0;
  std::size_t cols = 0;

  friend bool operator==(const MatrixShape&, const MatrixShape&) = default;
};

/// Row and column counts of the condition matrix, obtained by enumerating
/// monomials and derivative multi-indices rather than by formula.
MatrixShape condition_shape_p3(const SystemP3& s);
MatrixShape condition_shape_p2(const PlaneSystem& s);
MatrixShape condition_shape_quadric(const QuadricSystem& s);

/// Affine coordinates of sample points (x0 = 1 chart for projective space;
/// (u, v) for the product of two affine lines).
using AffinePoint3 = std::array<std::uint64_t, 3>;
using AffinePoint2 = std::array<std::uint64_t, 2>;

/// Vanishing conditions of all partial derivatives of order < m_i at the
/// i-th point, one row per (point, multi-index), one column per monomial.
ConditionMatrix build_condition_matrix_p3(const SystemP3& s, std::span<const AffinePoint3> points,
                                          std::uint64_t prime);
ConditionMatrix build_condition_matrix_p2(const PlaneSystem& s, std::span<const AffinePoint2> points,
                                          std::uint64_t prime);
ConditionMatrix build_condition_matrix_quadric(const QuadricSystem& s,
                                               std::span<const AffinePoint2> points,
                                               std::uint64_t prime);

struct OracleResult {
  Int dim = -1;
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Samples actually evaluated; sampling stops early once the rank reaches
  /// min(rows, cols), which no further sample can exceed.
  int samples_run = 0;
  std::vector<std::uint64_t> primes;
};

/// Projective dimension (cols - 1 - max rank) of the system through
/// pseudo-random points over large prime fields, -1 when empty.
/// Deterministic in (cfg.seed, the system). Negative multiplicities impose
/// nothing. Throws size_limit_exceeded or degenerate_sample.
OracleResult oracle_p3(const SystemP3& s, const OracleConfig& cfg);
OracleResult oracle_p2(const PlaneSystem& s, const OracleConfig& cfg);
OracleResult oracle_quadric(const QuadricSystem& s, const OracleConfig& cfg);

inline Int oracle_dim_p3(const SystemP3& s, const OracleConfig& cfg) { return oracle_p3(s, cfg).dim; }
inline Int oracle_dim_p2(const PlaneSystem& s, const OracleConfig& cfg) { return oracle_p2(s, cfg).dim; }
inline Int oracle_dim_quadric(const QuadricSystem& s, const OracleConfig& cfg) {
  return oracle_quadric(s, cfg).dim;
}

}  // namespace fatpoints
