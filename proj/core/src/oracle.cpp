#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

using Exponent = std::array<Int, 3>;

constexpr int kMaxResampleAttempts = 100;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t hash_instance(char tag, std::initializer_list<Int> head, const std::vector<Int>& mults) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  feed(static_cast<std::uint64_t>(tag));
  for (Int v : head) feed(static_cast<std::uint64_t>(v));
  feed(mults.size());
  for (Int v : mults) feed(static_cast<std::uint64_t>(v));
  return h;
}

/// Exponent vectors in `nvars` variables of total degree at most `d`.
std::vector<Exponent> total_degree_exponents(int nvars, Int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (nvars == 2) {
    for (Int s = 0; s <= d; ++s)
      for (Int i = s; i >= 0; --i) out.push_back({i, s - i, 0});
  } else {
    for (Int s = 0; s <= d; ++s)
      for (Int i = s; i >= 0; --i)
        for (Int j = s - i; j >= 0; --j) out.push_back({i, j, s - i - j});
  }
  return out;
}

std::vector<Exponent> box_exponents(Int a, Int b) {
  std::vector<Exponent> out;
  if (a < 0 || b < 0) return out;
  for (Int i = 0; i <= a; ++i)
    for (Int j = 0; j <= b; ++j) out.push_back({i, j, 0});
  return out;
}

std::size_t count_rows(int nvars, const std::vector<Int>& mults) {
  std::size_t rows = 0;
  for (Int m : mults) rows += total_degree_exponents(nvars, m - 1).size();
  return rows;
}

template <std::size_t N>
ConditionMatrix build_matrix(const std::vector<Exponent>& monomials, const std::vector<Int>& mults,
                             std::span<const std::array<std::uint64_t, N>> points, std::uint64_t prime) {
  if (points.size() < mults.size()) {
    throw Error(Errc::precondition_failed, "fewer sample points than multiplicities");
  }
  const PrimeField f(prime);
  ConditionMatrix out;
  out.prime = prime;
  out.cols = monomials.size();

  Int max_exp = 0;
  for (const auto& e : monomials)
    for (std::size_t v = 0; v < N; ++v) max_exp = std::max(max_exp, e[v]);
  Int max_order = 0;
  for (Int m : mults) max_order = std::max(max_order, m - 1);

  // falling[e][a] = e (e-1) ... (e-a+1); every factor is below the prime.
  std::vector<std::vector<std::uint64_t>> falling(max_exp + 1);
  for (Int e = 0; e <= max_exp; ++e) {
    falling[e].assign(std::min(e, max_order) + 1, f.one());
    for (Int a = 1; a < static_cast<Int>(falling[e].size()); ++a) {
      falling[e][a] = f.mul(falling[e][a - 1], f.to_mont(static_cast<std::uint64_t>(e - a + 1)));
      if (falling[e][a] == 0) throw std::logic_error("falling factorial vanished modulo the prime");
    }
  }

  for (Int m : mults) out.rows += total_degree_exponents(static_cast<int>(N), m - 1).size();
  out.entries.assign(out.rows * out.cols, 0);

  std::size_t row = 0;
  for (std::size_t p = 0; p < mults.size(); ++p) {
    if (mults[p] <= 0) continue;
    std::array<std::vector<std::uint64_t>, N> powers;
    for (std::size_t v = 0; v < N; ++v) {
      powers[v].resize(max_exp + 1);
      powers[v][0] = f.one();
      const std::uint64_t x = f.to_mont(points[p][v]);
      for (Int j = 1; j <= max_exp; ++j) powers[v][j] = f.mul(powers[v][j - 1], x);
    }
    for (const Exponent& alpha : total_degree_exponents(static_cast<int>(N), mults[p] - 1)) {
      std::uint64_t* dst = &out.entries[row * out.cols];
      for (std::size_t c = 0; c < monomials.size(); ++c) {
        const Exponent& e = monomials[c];
        std::uint64_t value = f.one();
        for (std::size_t v = 0; v < N && value != 0; ++v) {
          if (alpha[v] > e[v]) {
            value = 0;
          } else {
            value = f.mul(value, f.mul(falling[e[v]][alpha[v]], powers[v][e[v] - alpha[v]]));
          }
        }
        dst[c] = f.from_mont(value);
      }
      ++row;
    }
  }
  return out;
}

template <std::size_t N>
std::vector<std::array<std::uint64_t, N>> sample_points(std::size_t count, std::uint64_t prime,
                                                        std::uint64_t stream) {
  std::mt19937_64 rng(stream);
  std::uniform_int_distribution<std::uint64_t> coord(0, prime - 1);
  std::vector<std::array<std::uint64_t, N>> pts;
  int attempts = 0;
  while (pts.size() < count) {
    std::array<std::uint64_t, N> q;
    for (auto& x : q) x = coord(rng);
    if (std::find(pts.begin(), pts.end(), q) != pts.end()) {
      if (++attempts >= kMaxResampleAttempts) {
        throw Error(Errc::degenerate_sample, "could not draw distinct sample points");
      }
      continue;
    }
    pts.push_back(q);
  }
  return pts;
}

template <std::size_t N, class Build>
OracleResult run_oracle(const OracleConfig& cfg, std::uint64_t instance, std::size_t npoints,
                        MatrixShape shape, Build build) {
  cfg.validate();
  OracleResult out;
  out.rows = shape.rows;
  out.cols = shape.cols;
  out.primes = sample_primes(cfg);
  if (shape.cols == 0) return out;  // negative degree: no sections at all
  if (shape.rows > cfg.max_side || shape.cols > cfg.max_side) {
    throw Error(Errc::size_limit_exceeded, std::to_string(shape.rows) + "x" +
                                               std::to_string(shape.cols) + " condition matrix");
  }
  const std::size_t bound = std::min(shape.rows, shape.cols);
  for (int s = 0; s < cfg.samples && (out.samples_run == 0 || out.rank < bound); ++s) {
    const std::uint64_t prime = out.primes[s];
    const std::uint64_t stream = splitmix64(splitmix64(cfg.seed ^ instance) + static_cast<std::uint64_t>(s));
    const auto pts = sample_points<N>(npoints, prime, stream);
    const ConditionMatrix m = build(std::span<const std::array<std::uint64_t, N>>(pts), prime);
    out.rank = std::max(out.rank, rank_mod_p(m));
    ++out.samples_run;
  }
  out.dim = static_cast<Int>(shape.cols) - 1 - static_cast<Int>(out.rank);
  return out;
}

}  // namespace

void OracleConfig::validate() const {
  if (prime_bits < 50 || prime_bits > 62) {
    throw Error(Errc::invalid_config, "prime_bits must lie in [50, 62], got " + std::to_string(prime_bits));
  }
  if (samples < 1) throw Error(Errc::invalid_config, "samples must be at least 1");
}

std::vector<std::uint64_t> sample_primes(const OracleConfig& cfg) {
  cfg.validate();
  using Key = std::tuple<std::uint64_t, int, int>;
  thread_local std::map<Key, std::vector<std::uint64_t>> cache;
  const Key key{cfg.seed, cfg.prime_bits, cfg.samples};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::mt19937_64 rng(splitmix64(cfg.seed ^ 0x5eed0f9e1da11bull));
  std::vector<std::uint64_t> primes;
  while (primes.size() < static_cast<std::size_t>(cfg.samples)) {
    const std::uint64_t p = random_prime(cfg.prime_bits, rng);
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  cache.emplace(key, primes);
  return primes;
}

MatrixShape condition_shape_p3(const SystemP3& s) {
  return {count_rows(3, s.mults), total_degree_exponents(3, s.degree).size()};
}

MatrixShape condition_shape_p2(const PlaneSystem& s) {
  return {count_rows(2, s.mults), total_degree_exponents(2, s.degree).size()};
}

MatrixShape condition_shape_quadric(const QuadricSystem& s) {
  return {count_rows(2, s.mults), box_exponents(s.a, s.b).size()};
}

ConditionMatrix build_condition_matrix_p3(const SystemP3& s, std::span<const AffinePoint3> points,
                                          std::uint64_t prime) {
  return build_matrix<3>(total_degree_exponents(3, s.degree), s.mults, points, prime);
}

ConditionMatrix build_condition_matrix_p2(const PlaneSystem& s, std::span<const AffinePoint2> points,
                                          std::uint64_t prime) {
  return build_matrix<2>(total_degree_exponents(2, s.degree), s.mults, points, prime);
}

ConditionMatrix build_condition_matrix_quadric(const QuadricSystem& s,
                                               std::span<const AffinePoint2> points,
                                               std::uint64_t prime) {
  return build_matrix<2>(box_exponents(s.a, s.b), s.mults, points, prime);
}

OracleResult oracle_p3(const SystemP3& s, const OracleConfig& cfg) {
  return run_oracle<3>(cfg, hash_instance('3', {s.degree}, s.mults), s.points(), condition_shape_p3(s),
                       [&](std::span<const AffinePoint3> pts, std::uint64_t p) {
                         return build_condition_matrix_p3(s, pts, p);
                       });
}

OracleResult oracle_p2(const PlaneSystem& s, const OracleConfig& cfg) {
  return run_oracle<2>(cfg, hash_instance('2', {s.degree}, s.mults), s.points(), condition_shape_p2(s),
                       [&](std::span<const AffinePoint2> pts, std::uint64_t p) {
                         return build_condition_matrix_p2(s, pts, p);
                       });
}

OracleResult oracle_quadric(const QuadricSystem& s, const OracleConfig& cfg) {
  return run_oracle<2>(cfg, hash_instance('Q', {s.a, s.b}, s.mults), s.mults.size(),
                       condition_shape_quadric(s),
                       [&](std::span<const AffinePoint2> pts, std::uint64_t p) {
                         return build_condition_matrix_quadric(s, pts, p);
                       });
}

}  // namespace fatpoints
