#include "fatpoints/cremona.hpp"

#include <numeric>
#include <string>

#include "fatpoints/error.hpp"

namespace fatpoints {

ProjectivePoint primitive(const ProjectivePoint& x) {
  Int g = 0;
  for (Int c : x) g = std::gcd(g, c);
  if (g == 0) throw Error(Errc::precondition_failed, "(0:0:0:0) is not a projective point");
  ProjectivePoint out;
  Int sign = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = x[i] / g;
    if (sign == 0 && out[i] != 0) sign = out[i] > 0 ? 1 : -1;
  }
  for (Int& c : out) c *= sign;
  return out;
}

bool projectively_equal(const ProjectivePoint& x, const ProjectivePoint& y) {
  return primitive(x) == primitive(y);
}

ProjectivePoint cremona_point(const ProjectivePoint& x) {
  int zeros = 0;
  for (Int c : x) zeros += (c == 0);
  if (zeros >= 2) {
    throw Error(Errc::indeterminate_point, "point lies on two coordinate planes");
  }
  ProjectivePoint y{};
  for (std::size_t i = 0; i < 4; ++i) {
    Int prod = 1;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != i) prod = checked_mul(prod, x[j]);
    }
    y[i] = prod;
  }
  return primitive(y);
}

Int cremona_increment(const SystemP3& s) {
  Int sum = 0;
  for (std::size_t i = 0; i < 4; ++i) sum = checked_add(sum, s.mult(i));
  return checked_sub(checked_mul(2, s.degree), sum);
}

SystemP3 cremona_divisor(const SystemP3& s) {
  const Int k = cremona_increment(s);
  SystemP3 out = padded(s, 4);
  out.degree = checked_add(out.degree, k);
  for (std::size_t i = 0; i < 4; ++i) out.mults[i] = checked_add(out.mults[i], k);
  return out;
}

CurveClassP3 cremona_curve(const CurveClassP3& c) {
  Int w = c.degree;
  for (std::size_t i = 0; i < 4; ++i) w = checked_sub(w, c.mult(i));
  CurveClassP3 out = padded(c, 4);
  out.degree = checked_add(out.degree, checked_mul(2, w));
  for (std::size_t i = 0; i < 4; ++i) out.mults[i] = checked_add(out.mults[i], w);
  return out;
}

bool vdim_change_hypothesis(const SystemP3& s) {
  const Int twice = checked_mul(2, s.degree);
  Int total = 0;
  for (std::size_t i = 0; i < 4; ++i) total = checked_add(total, s.mult(i));
  // Each triple is the total minus one base multiplicity.
  for (std::size_t i = 0; i < 4; ++i) {
    if (twice < checked_sub(total, s.mult(i))) return false;
  }
  return true;
}

Int vdim_change(const SystemP3& s) {
  if (!vdim_change_hypothesis(s)) {
    throw Error(Errc::hypothesis_violated,
                "2d < mi + mj + mk for some base triple of " + to_string(s));
  }
  Int change = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Int t = checked_sub(checked_add(s.mult(i), s.mult(j)), s.degree);
      if (t >= 2) change = checked_add(change, binom(1 + t, 3));
      if (t <= -2) change = checked_sub(change, binom(1 - t, 3));
    }
  }
  return change;
}

bool corollary_monotone(const SystemP3& s) {
  if (!vdim_change_hypothesis(s)) {
    throw Error(Errc::hypothesis_violated,
                "2d < mi + mj + mk for some base triple of " + to_string(s));
  }
  const SystemP3 image = cremona_divisor(s);
  if (image.degree >= s.degree) return true;
  return vdim_p3(image) >= vdim_p3(s);
}

}  // namespace fatpoints
