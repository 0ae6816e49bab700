#include "fatpoints/standard_form.hpp"

#include "fatpoints/error.hpp"

namespace fatpoints {

bool is_standard(const SystemP3& s) {
  Int top4 = 0;
  for (std::size_t i = 0; i < 4; ++i) top4 = checked_add(top4, s.mult(i));
  if (checked_mul(2, s.degree) < top4) return false;
  for (std::size_t i = 1; i < s.points(); ++i) {
    if (s.mults[i - 1] < s.mults[i]) return false;
  }
  return true;
}

SystemP3 standard_class(std::size_t i) {
  return SystemP3{2, std::vector<Int>(i, 1)};
}

SystemP3 StandardDecomposition::recompose() const {
  SystemP3 total = base;
  for (const auto& [i, c] : coefficients) total = total + c * standard_class(i);
  return total;
}

StandardDecomposition decompose(const SystemP3& s) {
  if (!is_standard(s)) throw Error(Errc::not_standard_form, to_string(s));
  if (!is_normalized(s)) throw Error(Errc::precondition_failed, to_string(s) + " is not normalized");

  StandardDecomposition out;
  const std::size_t a = s.points();
  if (a <= 3) {
    out.base = s;
    return out;
  }
  const Int m4 = s.mults[3];
  out.base.degree = checked_sub(s.degree, checked_mul(2, m4));
  for (std::size_t i = 0; i < 3; ++i) out.base.mults.push_back(s.mults[i] - m4);
  // Coefficients are keyed by the 1-based point count i.
  for (std::size_t i = 4; i < a; ++i) out.coefficients[i] = s.mults[i - 1] - s.mults[i];
  out.coefficients[a] = s.mults[a - 1];
  return out;
}

bool empty_three(const SystemP3& s) {
  if (effective_points(s.mults) > 3) {
    throw Error(Errc::too_many_points, to_string(s) + " has more than three points");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (s.degree < s.mult(i)) return true;
  }
  return false;
}

}  // namespace fatpoints
