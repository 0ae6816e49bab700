#include "fatpoints/classes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fatpoints {

template <class Tag>
PointClass<Tag> operator+(const PointClass<Tag>& lhs, const PointClass<Tag>& rhs) {
  PointClass<Tag> out;
  out.degree = checked_add(lhs.degree, rhs.degree);
  out.mults.resize(std::max(lhs.points(), rhs.points()));
  for (std::size_t i = 0; i < out.mults.size(); ++i) {
    out.mults[i] = checked_add(lhs.mult(i), rhs.mult(i));
  }
  return out;
}

template <class Tag>
PointClass<Tag> operator-(const PointClass<Tag>& lhs, const PointClass<Tag>& rhs) {
  return lhs + (Int{-1} * rhs);
}

template <class Tag>
PointClass<Tag> operator*(Int factor, const PointClass<Tag>& cls) {
  PointClass<Tag> out;
  out.degree = checked_mul(factor, cls.degree);
  out.mults.reserve(cls.points());
  for (Int m : cls.mults) out.mults.push_back(checked_mul(factor, m));
  return out;
}

template <class Tag>
bool same_class(const PointClass<Tag>& lhs, const PointClass<Tag>& rhs) {
  if (lhs.degree != rhs.degree) return false;
  const std::size_t n = std::max(lhs.points(), rhs.points());
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs.mult(i) != rhs.mult(i)) return false;
  }
  return true;
}

template <class Tag>
PointClass<Tag> padded(const PointClass<Tag>& cls, std::size_t count) {
  PointClass<Tag> out = cls;
  if (out.mults.size() < count) out.mults.resize(count, 0);
  return out;
}

std::size_t effective_points(const std::vector<Int>& mults) noexcept {
  std::size_t n = mults.size();
  while (n > 0 && mults[n - 1] == 0) --n;
  return n;
}

Int vdim_p3(const SystemP3& s) {
  Int v = checked_sub(binom(checked_add(s.degree, 3), 3), 1);
  for (Int m : s.mults) v = checked_sub(v, binom(checked_add(m, 2), 3));
  return v;
}

Int vdim_p2(const PlaneSystem& s) {
  Int v = checked_sub(binom(checked_add(s.degree, 2), 2), 1);
  for (Int m : s.mults) v = checked_sub(v, binom(checked_add(m, 1), 2));
  return v;
}

Int vdim_quadric(const QuadricSystem& s) {
  // (a+1)(b+1) sections when both are non-negative, none otherwise.
  Int sections = 0;
  if (s.a >= 0 && s.b >= 0) sections = checked_mul(checked_add(s.a, 1), checked_add(s.b, 1));
  Int v = checked_sub(sections, 1);
  for (Int m : s.mults) v = checked_sub(v, binom(checked_add(m, 1), 2));
  return v;
}

Int pair(const CurveClassP3& c, const SystemP3& s) {
  Int value = checked_mul(c.degree, s.degree);
  const std::size_t n = std::max(c.points(), s.points());
  for (std::size_t i = 0; i < n; ++i) {
    value = checked_sub(value, checked_mul(c.mult(i), s.mult(i)));
  }
  return value;
}

template <class Tag>
Normalization<Tag> normalize_tracked(const PointClass<Tag>& cls) {
  Normalization<Tag> out;
  out.result.degree = cls.degree;

  std::vector<std::size_t> idx(cls.points());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i : idx) {
    if (cls.mults[i] < 0) out.clamped.push_back(i);
  }
  auto value = [&](std::size_t i) { return std::max<Int>(cls.mults[i], 0); };
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return value(a) > value(b); });
  for (std::size_t i : idx) {
    if (value(i) == 0) break;
    out.order.push_back(i);
    out.result.mults.push_back(value(i));
  }
  return out;
}

template <class Tag>
std::string to_string(const PointClass<Tag>& cls) {
  std::ostringstream os;
  os << '(' << cls.degree << ';';
  for (std::size_t i = 0; i < cls.points(); ++i) {
    os << (i == 0 ? " " : ",") << cls.mults[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const QuadricSystem& s) {
  std::ostringstream os;
  os << '(' << s.a << ',' << s.b << ';';
  for (std::size_t i = 0; i < s.mults.size(); ++i) {
    os << (i == 0 ? " " : ",") << s.mults[i];
  }
  os << ')';
  return os.str();
}

#define FATPOINTS_INSTANTIATE(Tag)                                                     \
  template PointClass<Tag> operator+(const PointClass<Tag>&, const PointClass<Tag>&); \
  template PointClass<Tag> operator-(const PointClass<Tag>&, const PointClass<Tag>&); \
  template PointClass<Tag> operator*(Int, const PointClass<Tag>&);                     \
  template bool same_class(const PointClass<Tag>&, const PointClass<Tag>&);            \
  template PointClass<Tag> padded(const PointClass<Tag>&, std::size_t);                \
  template Normalization<Tag> normalize_tracked(const PointClass<Tag>&);               \
  template std::string to_string(const PointClass<Tag>&);

FATPOINTS_INSTANTIATE(SurfaceTag)
FATPOINTS_INSTANTIATE(CurveTag)
FATPOINTS_INSTANTIATE(PlaneTag)

#undef FATPOINTS_INSTANTIATE

}  // namespace fatpoints
