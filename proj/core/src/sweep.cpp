#include "fatpoints/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "fatpoints/dimension.hpp"

namespace fatpoints {

std::vector<SystemP3> canonical_systems(Int dmax, std::size_t points, Int mmax) {
  std::vector<std::vector<Int>> tuples;
  std::vector<Int> cur;
  std::function<void(Int)> extend = [&](Int cap) {
    tuples.push_back(cur);
    if (cur.size() == points) return;
    for (Int m = cap; m >= 1; --m) {
      cur.push_back(m);
      extend(m);
      cur.pop_back();
    }
  };
  extend(mmax);
  std::sort(tuples.begin(), tuples.end(), [&](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < points; ++i) {
      const Int x = i < a.size() ? a[i] : 0;
      const Int y = i < b.size() ? b[i] : 0;
      if (x != y) return x > y;
    }
    return false;
  });

  std::vector<SystemP3> out;
  out.reserve(static_cast<std::size_t>(dmax + 1) * tuples.size());
  for (Int d = 0; d <= dmax; ++d)
    for (const auto& t : tuples) out.push_back(SystemP3{d, t});
  return out;
}

std::vector<SystemP3> random_systems(std::size_t count, Int dmax, Int mmax, std::size_t points,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> degree(0, dmax);
  std::uniform_int_distribution<std::size_t> npoints(1, points);
  std::uniform_int_distribution<Int> mult(0, mmax);
  std::vector<SystemP3> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SystemP3 s;
    s.degree = degree(rng);
    s.mults.resize(npoints(rng));
    for (Int& m : s.mults) m = mult(rng);
    out.push_back(std::move(s));
  }
  return out;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
        return;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<VerifyRow> cross_validate(std::span<const SystemP3> systems, const OracleConfig& cfg,
                                      unsigned jobs) {
  std::vector<VerifyRow> rows(systems.size());
  parallel_for(systems.size(), jobs, [&](std::size_t i) {
    rows[i].system = systems[i];
    rows[i].fast_dim = full_dim(systems[i]).dim;
    rows[i].oracle_dim = oracle_dim_p3(systems[i], cfg);
  });
  return rows;
}

}  // namespace fatpoints
