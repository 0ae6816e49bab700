#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fatpoints/classes.hpp"

namespace fatpoints {

inline constexpr Int kDefaultCurveDegreeBound = 6;

/// Membership in the orbit of the line class (1; 1,1) under point
/// permutations and the cubic Cremona reflection. Decided by canonical
/// reduction: sort descending, accept on reaching (1; 1,1,0,...), otherwise
/// reflect while the degree strictly drops.
bool is_minus_one_curve(const CurveClassP3& c);

/// Sorted representatives (delta; mu1 >= ... >= mu_r) of the orbit classes
/// on `points` points with 1 <= delta <= degree_bound, in lexicographic
/// order of (delta, mults).
std::vector<CurveClassP3> enumerate_minus_one(std::size_t points, Int degree_bound);

/// Number of distinct index assignments of a class's multiplicities.
std::size_t arrangement_count(const CurveClassP3& c);

/// A (-1)-curve meeting a system negatively: pair(curve, system) = -t <= -2.
struct NegativeCurveRecord {
  CurveClassP3 curve;
  Int t = 0;
  Int contribution = 0;  // C(t + 1, 3)

  friend bool operator==(const NegativeCurveRecord&, const NegativeCurveRecord&) = default;
};

/// Every (-1)-curve class, with explicit point assignment, of degree at most
/// degree_bound whose pairing with s is at most -2. s must be normalized
/// with at most eight points.
std::vector<NegativeCurveRecord> negative_curves(const SystemP3& s,
                                                 Int degree_bound = kDefaultCurveDegreeBound);

/// Sum of C(t + 1, 3) over the given records. This ignores the h^2 term of
/// the underlying inequality, so it bounds the speciality from below only
/// when that term vanishes. Each record must actually pair to -t with s.
Int speciality_lower_bound(const SystemP3& s, std::span<const NegativeCurveRecord> curves);

}  // namespace fatpoints
