#pragma once

#include <cstddef>

#include "fatpoints/classes.hpp"

namespace fatpoints {

struct OracleConfig;

/// Restriction of L = (d; m1, ..., mr) to a smooth quadric through its
/// first `a` points: the bidegree (d, d) system with multiplicities
/// m1, ..., ma. Requires 4 <= a <= min(r, 9); throws bad_index otherwise.
QuadricSystem restrict_to_quadric(const SystemP3& s, std::size_t a);

/// Class correspondence induced by blowing up one point of P1 x P1 and
/// contracting the two rulings through it:
///   (a, b; m, m1, ..., mr)  <->  (a + b - m; b - m, a - m, m1, ..., mr),
/// where m is the multiplicity at `point_index` and the remaining points
/// keep their order. Entries may be negative when m > a or m > b.
/// Throws no_points for a system without points, bad_index when the index
/// is out of range.
PlaneSystem quadric_to_plane(const QuadricSystem& q, std::size_t point_index = 0);

struct RestrictionResult {
  QuadricSystem quadric;
  PlaneSystem plane_image;
  std::size_t point_used = 0;
};

/// restrict_to_quadric followed by quadric_to_plane at `point_index`.
RestrictionResult restrict_and_map(const SystemP3& s, std::size_t a, std::size_t point_index = 0);

/// Oracle certificate that the restriction of s to a quadric through its
/// first a points is non-empty and non-special: its actual dimension equals
/// its virtual dimension and both are non-negative.
/// Requires s normalized with d >= m1 (else hypothesis_violated) and
/// 4 <= a <= r <= 8 (else bad_index).
bool restricted_nonspecial_check(const SystemP3& s, std::size_t a, const OracleConfig& cfg);

}  // namespace fatpoints
