#include "fatpoints/quadric.hpp"

#include <algorithm>
#include <string>

#include "fatpoints/dimension.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/oracle.hpp"

namespace fatpoints {

QuadricSystem restrict_to_quadric(const SystemP3& s, std::size_t a) {
  const std::size_t limit = std::min<std::size_t>(s.points(), 9);
  if (a < 4 || a > limit) {
    throw Error(Errc::bad_index, "quadric through " + std::to_string(a) + " points of " + to_string(s));
  }
  return QuadricSystem{s.degree, s.degree, std::vector<Int>(s.mults.begin(), s.mults.begin() + a)};
}

PlaneSystem quadric_to_plane(const QuadricSystem& q, std::size_t point_index) {
  if (q.mults.empty()) throw Error(Errc::no_points, to_string(q) + " has no marked point");
  if (point_index >= q.mults.size()) {
    throw Error(Errc::bad_index, "point " + std::to_string(point_index) + " of " + to_string(q));
  }
  const Int m = q.mults[point_index];
  PlaneSystem out;
  out.degree = checked_sub(checked_add(q.a, q.b), m);
  out.mults.push_back(checked_sub(q.b, m));
  out.mults.push_back(checked_sub(q.a, m));
  for (std::size_t i = 0; i < q.mults.size(); ++i) {
    if (i != point_index) out.mults.push_back(q.mults[i]);
  }
  return out;
}

RestrictionResult restrict_and_map(const SystemP3& s, std::size_t a, std::size_t point_index) {
  RestrictionResult out;
  out.quadric = restrict_to_quadric(s, a);
  out.plane_image = quadric_to_plane(out.quadric, point_index);
  out.point_used = point_index;
  return out;
}

bool restricted_nonspecial_check(const SystemP3& s, std::size_t a, const OracleConfig& cfg) {
  if (!is_normalized(s)) throw Error(Errc::precondition_failed, to_string(s) + " is not normalized");
  if (s.points() > kMaxPoints || a < 4 || a > s.points()) {
    throw Error(Errc::bad_index, "quadric through " + std::to_string(a) + " points of " + to_string(s));
  }
  if (s.degree < s.mult(0)) throw Error(Errc::hypothesis_violated, "d < m1 in " + to_string(s));

  const QuadricSystem q = restrict_to_quadric(s, a);
  const Int v = vdim_quadric(q);
  return v >= 0 && oracle_dim_quadric(q, cfg) == v;
}

}  // namespace fatpoints
