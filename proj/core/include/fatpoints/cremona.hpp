#pragma once

#include <array>
#include <cstddef>

#include "fatpoints/classes.hpp"

namespace fatpoints {

/// Homogeneous coordinates (x0:x1:x2:x3) of a point of P3.
using ProjectivePoint = std::array<Int, 4>;

/// Primitive representative: coordinates divided by their gcd and the first
/// non-zero coordinate made positive. Throws precondition_failed on (0:0:0:0).
ProjectivePoint primitive(const ProjectivePoint& x);

bool projectively_equal(const ProjectivePoint& x, const ProjectivePoint& y);

/// Standard cubic Cremona map (x_i) -> (1/x_i), with denominators cleared:
/// (x1x2x3 : x0x2x3 : x0x1x3 : x0x1x2), returned in primitive form.
/// Points with two or more vanishing coordinates lie in the indeterminacy
/// locus and raise Errc::indeterminate_point.
ProjectivePoint cremona_point(const ProjectivePoint& x);

/// One application of the cubic Cremona map to a surface system, based at
/// the first four points.
struct CremonaStep {
  Int k = 0;
  std::array<std::size_t, 4> base_indices{0, 1, 2, 3};
};

/// k = 2d - (m1 + m2 + m3 + m4), with phantom zeros when r < 4.
Int cremona_increment(const SystemP3& s);

/// (d + k; m1 + k, ..., m4 + k, m5, ..., mr). The result always lists at least
/// four points and is not normalized, so negative entries survive.
SystemP3 cremona_divisor(const SystemP3& s);

/// Dual action on curve classes: with w = delta - (mu1 + ... + mu4),
/// (delta + 2w; mu1 + w, ..., mu4 + w, mu5, ...). Preserves the pairing with
/// cremona_divisor.
CurveClassP3 cremona_curve(const CurveClassP3& c);

/// True when 2d >= mi + mj + mk for every triple among the first four points.
bool vdim_change_hypothesis(const SystemP3& s);

/// v(Cr(s)) - v(s) in closed form, summing over the six pairs of base points
/// with t_ij = m_i + m_j - d:
///   sum_{t_ij >= 2} C(1 + t_ij, 3) - sum_{t_ij <= -2} C(1 - t_ij, 3).
/// Throws hypothesis_violated outside vdim_change_hypothesis.
Int vdim_change(const SystemP3& s);

/// Whether a degree drop under the transformation comes with a
/// non-decreasing virtual dimension (vacuously true when the degree does
/// not drop). Throws hypothesis_violated outside vdim_change_hypothesis.
bool corollary_monotone(const SystemP3& s);

}  // namespace fatpoints
