#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatpoints/classes.hpp"

namespace fatpoints {

inline constexpr std::size_t kMaxPlanePoints = 10;

/// Sorted descending, non-negative, and d >= m1 + m2 + m3 (zero-padded).
bool is_standard_plane(const PlaneSystem& s);

/// Quadratic transformation based at the first three points:
/// k = d - (m1 + m2 + m3), result (d + k; m1 + k, m2 + k, m3 + k, m4, ...).
/// At least three points are listed in the raw, unnormalized result.
PlaneSystem p2_cremona(const PlaneSystem& s);

enum class PlaneStepKind { sort, clamp, cremona, declare_empty };

struct PlaneStep {
  PlaneStepKind kind = PlaneStepKind::sort;
  PlaneSystem before;
  PlaneSystem after;
  Int k = 0;
  std::string reason;
};

struct PlaneReduction {
  std::vector<PlaneStep> steps;
  PlaneSystem terminal;
  bool empty = false;
};

/// Sort and apply quadratic transformations until the system is in
/// standard plane form, or declare it empty on negative degree.
/// Throws too_many_points beyond kMaxPlanePoints.
PlaneReduction p2_standardize(const PlaneSystem& s);

/// Whether h^1 of a standard plane system is known to vanish.
enum class H1Vanishing { certified, unknown };

struct PlaneFacts {
  bool nonempty = true;
  H1Vanishing h1 = H1Vanishing::unknown;
};

/// For a standard plane system: it is non-empty, and it is non-special when
/// its anticanonical degree 3d - sum m_i is non-negative. Nothing is claimed
/// otherwise. Throws not_standard_form.
PlaneFacts p2_nonspecial_facts(const PlaneSystem& s);

}  // namespace fatpoints
