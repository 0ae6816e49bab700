#include "fatpoints/minus_one.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "fatpoints/cremona.hpp"
#include "fatpoints/dimension.hpp"
#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

void sort_descending(CurveClassP3& c) {
  std::sort(c.mults.begin(), c.mults.end(), std::greater<>());
}

bool is_line_seed(const CurveClassP3& sorted) {
  if (sorted.degree != 1) return false;
  for (std::size_t i = 0; i < sorted.points(); ++i) {
    if (sorted.mults[i] != (i < 2 ? 1 : 0)) return false;
  }
  return sorted.points() >= 2;
}

CurveClassP3 line_seed(std::size_t points) {
  CurveClassP3 seed{1, std::vector<Int>(points, 0)};
  seed.mults[0] = seed.mults[1] = 1;
  return seed;
}

/// Cremona reflection based at the given four positions.
CurveClassP3 reflect_at(const CurveClassP3& c, const std::array<std::size_t, 4>& base) {
  CurveClassP3 out = c;
  Int w = c.degree;
  for (std::size_t i : base) w -= c.mults[i];
  out.degree += 2 * w;
  for (std::size_t i : base) out.mults[i] += w;
  return out;
}

}  // namespace

bool is_minus_one_curve(const CurveClassP3& c) {
  Int total = 0;
  for (Int mu : c.mults) total = checked_add(total, mu);
  // The reflection preserves 2*delta - sum(mu); the seed has it zero.
  if (checked_mul(2, c.degree) != total) return false;

  CurveClassP3 cur = padded(c, 4);
  const Int start = cur.degree;
  for (Int iter = 0; iter <= 4 * std::max<Int>(start, 1); ++iter) {
    sort_descending(cur);
    if (is_line_seed(cur)) return true;
    Int w = cur.degree;
    for (std::size_t i = 0; i < 4; ++i) w = checked_sub(w, cur.mults[i]);
    if (w >= 0) return false;
    cur = cremona_curve(cur);
    if (cur.degree < 1) return false;
  }
  return false;
}

std::vector<CurveClassP3> enumerate_minus_one(std::size_t points, Int degree_bound) {
  if (points < 2 || degree_bound < 1) return {};

  auto key = [](const CurveClassP3& c) {
    std::vector<Int> k{c.degree};
    k.insert(k.end(), c.mults.begin(), c.mults.end());
    return k;
  };

  std::set<std::vector<Int>> seen;
  std::deque<CurveClassP3> queue;
  const CurveClassP3 seed = line_seed(points);
  seen.insert(key(seed));
  queue.push_back(seed);

  std::vector<std::array<std::size_t, 4>> bases;
  for (std::size_t a = 0; a < points; ++a)
    for (std::size_t b = a + 1; b < points; ++b)
      for (std::size_t c = b + 1; c < points; ++c)
        for (std::size_t d = c + 1; d < points; ++d) bases.push_back({a, b, c, d});

  // Every orbit class reduces to the seed through strictly decreasing
  // degrees, so a degree-pruned search reaches all classes under the bound.
  while (!queue.empty()) {
    const CurveClassP3 cur = queue.front();
    queue.pop_front();
    for (const auto& base : bases) {
      CurveClassP3 next = reflect_at(cur, base);
      if (next.degree < 1 || next.degree > degree_bound) continue;
      sort_descending(next);
      if (seen.insert(key(next)).second) queue.push_back(std::move(next));
    }
  }

  std::vector<CurveClassP3> out;
  out.reserve(seen.size());
  for (const auto& k : seen) {
    out.push_back(CurveClassP3{k.front(), std::vector<Int>(k.begin() + 1, k.end())});
  }
  return out;
}

std::size_t arrangement_count(const CurveClassP3& c) {
  std::vector<Int> m = c.mults;
  std::sort(m.begin(), m.end());
  std::size_t count = 0;
  do {
    ++count;
  } while (std::next_permutation(m.begin(), m.end()));
  return count;
}

std::vector<NegativeCurveRecord> negative_curves(const SystemP3& s, Int degree_bound) {
  if (effective_points(s.mults) > kMaxPoints) throw Error(Errc::too_many_points, to_string(s));
  std::vector<NegativeCurveRecord> out;
  const std::size_t r = s.points();
  for (const CurveClassP3& rep : enumerate_minus_one(r, degree_bound)) {
    CurveClassP3 arranged = rep;
    // Descending permutations, starting from the sorted representative.
    do {
      const Int p = pair(arranged, s);
      if (p <= -2) out.push_back({arranged, -p, binom(1 - p, 3)});
    } while (std::prev_permutation(arranged.mults.begin(), arranged.mults.end()));
  }
  return out;
}

Int speciality_lower_bound(const SystemP3& s, std::span<const NegativeCurveRecord> curves) {
  Int total = 0;
  for (const auto& rec : curves) {
    if (pair(rec.curve, s) != -rec.t || rec.t < 2) {
      throw Error(Errc::precondition_failed,
                  to_string(rec.curve) + " does not meet " + to_string(s) + " with the recorded t");
    }
    total = checked_add(total, rec.contribution);
  }
  return total;
}

}  // namespace fatpoints
