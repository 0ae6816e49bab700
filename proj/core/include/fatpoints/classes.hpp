#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "fatpoints/arith.hpp"

namespace fatpoints {

struct SurfaceTag {};
struct CurveTag {};
struct PlaneTag {};

/// A class on a blow-up of projective space at general points, stored as a
/// degree together with one coefficient per exceptional divisor.
///
/// The same coordinates serve for surface systems and plane systems
/// (degree d and multiplicities m_i) and for curve classes (degree delta
/// and multiplicities mu_i). Missing trailing entries are read as zero.
template <class Tag>
struct PointClass {
  Int degree = 0;
  std::vector<Int> mults;

  std::size_t points() const noexcept { return mults.size(); }

  /// Multiplicity at position i, zero past the end.
  Int mult(std::size_t i) const noexcept { return i < mults.size() ? mults[i] : 0; }

  friend bool operator==(const PointClass&, const PointClass&) = default;
};

using SystemP3 = PointClass<SurfaceTag>;
using CurveClassP3 = PointClass<CurveTag>;
using PlaneSystem = PointClass<PlaneTag>;

/// Curves of bidegree (a, b) on a smooth quadric P1 x P1 with fat points.
struct QuadricSystem {
  Int a = 0;
  Int b = 0;
  std::vector<Int> mults;

  friend bool operator==(const QuadricSystem&, const QuadricSystem&) = default;
};

/// Componentwise sum of classes; the shorter list is zero-padded.
template <class Tag>
PointClass<Tag> operator+(const PointClass<Tag>& lhs, const PointClass<Tag>& rhs);

template <class Tag>
PointClass<Tag> operator-(const PointClass<Tag>& lhs, const PointClass<Tag>& rhs);

template <class Tag>
PointClass<Tag> operator*(Int factor, const PointClass<Tag>& cls);

/// Equality after dropping trailing zero multiplicities.
template <class Tag>
bool same_class(const PointClass<Tag>& lhs, const PointClass<Tag>& rhs);

/// Copy of cls padded with zero multiplicities up to `count` points.
template <class Tag>
PointClass<Tag> padded(const PointClass<Tag>& cls, std::size_t count);

/// Number of points once trailing zero multiplicities are ignored.
std::size_t effective_points(const std::vector<Int>& mults) noexcept;

// Virtual (projective) dimensions. Each may be smaller than -1.
Int vdim_p3(const SystemP3& s);
Int vdim_p2(const PlaneSystem& s);
Int vdim_quadric(const QuadricSystem& s);

/// Intersection pairing delta*d - sum mu_i*m_i of a curve class with a
/// surface system on the blow-up of P3.
Int pair(const CurveClassP3& c, const SystemP3& s);

/// Result of sorting and clamping a class, with the bookkeeping needed to
/// report which input points ended where.
template <class Tag>
struct Normalization {
  PointClass<Tag> result;
  /// order[j] is the input position of the j-th surviving multiplicity.
  std::vector<std::size_t> order;
  /// Input positions whose negative multiplicity was replaced by zero.
  std::vector<std::size_t> clamped;
};

/// Sort multiplicities descending (ties keep input order), replace
/// negative entries with zero and drop zeros. The degree is unchanged.
template <class Tag>
Normalization<Tag> normalize_tracked(const PointClass<Tag>& cls);

template <class Tag>
PointClass<Tag> normalize(const PointClass<Tag>& cls) {
  return normalize_tracked(cls).result;
}

template <class Tag>
bool is_normalized(const PointClass<Tag>& cls) {
  return normalize(cls) == cls;
}

/// "(d; m1,m2,...)" rendering used by traces and diagnostics.
template <class Tag>
std::string to_string(const PointClass<Tag>& cls);

std::string to_string(const QuadricSystem& s);

template <class Tag>
std::ostream& operator<<(std::ostream& os, const PointClass<Tag>& cls) {
  return os << to_string(cls);
}

inline std::ostream& operator<<(std::ostream& os, const QuadricSystem& s) {
  return os << to_string(s);
}

}  // namespace fatpoints
