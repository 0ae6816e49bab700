#pragma once

#include <cstddef>
#include <map>

#include "fatpoints/classes.hpp"

namespace fatpoints {

/// 2d >= m1 + m2 + m3 + m4 (zero-padded) and m1 >= m2 >= ... >= mr.
bool is_standard(const SystemP3& s);

/// The quadric class (2; 1^i) through i simple points.
SystemP3 standard_class(std::size_t i);

/// L = base + sum_i c_i * (2; 1^i), i = 4..a, for L in standard form.
struct StandardDecomposition {
  SystemP3 base;
  std::map<std::size_t, Int> coefficients;

  SystemP3 recompose() const;
};

/// Peels quadric classes off a normalized standard-form system, yielding
/// c_a = m_a and c_i = m_i - m_{i+1} for 4 <= i < a, where a is the number of
/// points, and base = (d - 2m4; m1 - m4, m2 - m4, m3 - m4).
///
/// Throws not_standard_form, or precondition_failed if s is not normalized.
StandardDecomposition decompose(const SystemP3& s);

/// Emptiness of a system through at most three general points: empty
/// exactly when d < m_i for some i (missing points count as multiplicity
/// zero). Throws too_many_points for four or more points.
bool empty_three(const SystemP3& s);

}  // namespace fatpoints
