#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fatpoints/classes.hpp"
#include "fatpoints/cremona.hpp"

namespace fatpoints {

/// Largest number of points the reduction procedure accepts.
inline constexpr std::size_t kMaxPoints = 8;

enum class StepKind { sort, remove_plane, cremona, clamp, declare_empty };

std::string_view to_string(StepKind kind) noexcept;

/// One entry of a reduction trace. `points` holds original point labels
/// (0-based input positions); labels at or past the input length denote
/// auxiliary general points of multiplicity zero.
struct ReductionStep {
  StepKind kind = StepKind::sort;
  SystemP3 before;
  SystemP3 after;
  /// sort: new label order; remove_plane: the three plane points;
  /// cremona: the four base points; clamp: labels reset to zero.
  std::vector<std::size_t> points;
  Int k = 0;           // cremona only
  std::string reason;  // declare_empty only
};

/// A summand C(t_i + 1, 3) of the speciality correction, with i 1-based.
struct CorrectionTerm {
  std::size_t index = 0;
  Int t = 0;
  Int contribution = 0;

  friend bool operator==(const CorrectionTerm&, const CorrectionTerm&) = default;
};

struct StandardDim {
  /// v(s) + sum of corrections, without any emptiness adjustment.
  Int raw = 0;
  Int correction = 0;
  /// Set when d < 0 or d < m1: the system is empty whatever raw says.
  bool empty = false;
  std::vector<CorrectionTerm> terms;

  Int dim() const noexcept { return empty ? -1 : raw; }
};

/// Dimension of a standard-form system through at most eight points:
///   dim = v(s) + sum_{t_i >= 2} C(t_i + 1, 3),
/// with t_1 = m2 + m3 - d and t_i = m1 + m_i - d for i >= 2.
/// Throws not_standard_form or too_many_points.
StandardDim standard_dim(const SystemP3& s);

struct DimReport {
  Int dim = -1;
  /// Virtual dimension of the input as given.
  Int vdim = 0;
  /// dim - vdim when positive, otherwise zero.
  Int speciality = 0;
  /// dim > max(vdim, -1).
  bool special = false;
  std::vector<ReductionStep> trace;
  SystemP3 terminal;
  std::vector<CorrectionTerm> correction_terms;
};

/// Exact dimension of the system through at most eight general points.
///
/// Repeats until the system is in standard form: normalize; stop empty on
/// negative degree or on a multiplicity above the degree; remove the plane
/// through the three largest points while 2d < m1 + m2 + m3; otherwise apply
/// the cubic Cremona transformation while 2d < m1 + m2 + m3 + m4. The
/// terminal standard-form system is then evaluated with standard_dim.
/// Throws too_many_points for more than eight points.
DimReport full_dim(const SystemP3& s);

/// Arithmetic self-check on the auxiliary system
///   N_b = (d - 2m_b + 2t_b - 2; m1 - m_b + t_b - 1, ..., m_{b-1} - m_b + t_b - 1, t_b - 1)
/// built from s with t_i = m1 + m_i - d and b = max{i >= 2 : t_i >= 1} >= 4:
/// returns whether its degree equals its first multiplicity minus one and
/// v(N_b) + 1 = -sum_{i=2..b} C(t_i + 1, 3). The identity is pure arithmetic
/// and is not restricted to standard form. Throws precondition_failed when
/// no such b exists.
bool claim_c1_identity(const SystemP3& s);

}  // namespace fatpoints
