#include "fatpoints/plane.hpp"

#include <algorithm>

#include "fatpoints/error.hpp"

namespace fatpoints {

bool is_standard_plane(const PlaneSystem& s) {
  for (std::size_t i = 0; i < s.points(); ++i) {
    if (s.mults[i] < 0) return false;
    if (i > 0 && s.mults[i - 1] < s.mults[i]) return false;
  }
  return s.degree >= checked_add(checked_add(s.mult(0), s.mult(1)), s.mult(2));
}

PlaneSystem p2_cremona(const PlaneSystem& s) {
  const Int k = checked_sub(s.degree, checked_add(checked_add(s.mult(0), s.mult(1)), s.mult(2)));
  PlaneSystem out = padded(s, 3);
  out.degree = checked_add(out.degree, k);
  for (std::size_t i = 0; i < 3; ++i) out.mults[i] = checked_add(out.mults[i], k);
  return out;
}

PlaneReduction p2_standardize(const PlaneSystem& s) {
  if (effective_points(s.mults) > kMaxPlanePoints) {
    throw Error(Errc::too_many_points, to_string(s));
  }
  PlaneReduction out;
  PlaneSystem cur = s;
  for (;;) {
    const auto norm = normalize_tracked(cur);
    if (!norm.clamped.empty()) {
      PlaneSystem clamped = cur;
      for (Int& m : clamped.mults) m = std::max<Int>(m, 0);
      out.steps.push_back({PlaneStepKind::clamp, cur, clamped, 0, {}});
      cur = clamped;
    }
    if (!same_class(normalize(cur), cur)) {
      out.steps.push_back({PlaneStepKind::sort, cur, norm.result, 0, {}});
    }
    cur = norm.result;

    if (cur.degree < 0) {
      out.steps.push_back({PlaneStepKind::declare_empty, cur, cur, 0, "negative degree"});
      out.terminal = cur;
      out.empty = true;
      return out;
    }
    if (is_standard_plane(cur)) break;

    PlaneSystem next = p2_cremona(cur);
    out.steps.push_back({PlaneStepKind::cremona, cur, next, next.degree - cur.degree, {}});
    cur = std::move(next);
  }
  // A standard system has m1 <= m1 + m2 + m3 <= d, so it is never empty.
  out.terminal = cur;
  return out;
}

PlaneFacts p2_nonspecial_facts(const PlaneSystem& s) {
  if (!is_standard_plane(s)) throw Error(Errc::not_standard_form, to_string(s));
  Int total = 0;
  for (Int m : s.mults) total = checked_add(total, m);
  PlaneFacts facts;
  facts.h1 = total <= checked_mul(3, s.degree) ? H1Vanishing::certified : H1Vanishing::unknown;
  return facts;
}

}  // namespace fatpoints
