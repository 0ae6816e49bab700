#include "fatpoints/modular.hpp"

#include <utility>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven witness set for n < 2^64.
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(int bits, std::mt19937_64& rng) {
  if (bits < 2 || bits > 62) throw Error(Errc::invalid_config, "prime size must be 2..62 bits");
  const std::uint64_t top = std::uint64_t{1} << (bits - 1);
  std::uniform_int_distribution<std::uint64_t> dist(top, (top << 1) - 1);
  for (;;) {
    const std::uint64_t candidate = dist(rng) | 1u;
    if (is_prime_u64(candidate)) return candidate;
  }
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || (p & 1) == 0 || p >= (std::uint64_t{1} << 62)) {
    throw Error(Errc::invalid_config, "Montgomery arithmetic needs an odd modulus below 2^62");
  }
  // Newton iteration for p^{-1} mod 2^64.
  std::uint64_t inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  neg_inv_ = ~inv + 1;
  const auto r = static_cast<UInt128>(1) << 64;
  one_ = static_cast<std::uint64_t>(r % p);
  r2_ = static_cast<std::uint64_t>(static_cast<UInt128>(one_) * one_ % p);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t r = one_;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(const ConditionMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  const PrimeField f(m.prime);
  const std::size_t cols = m.cols;
  std::vector<std::uint64_t> a(m.entries.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.to_mont(m.entries[i]);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols + col, a.begin() + (pivot + 1) * cols,
                       a.begin() + rank * cols + col);
    }
    std::uint64_t* prow = &a[rank * cols];
    const std::uint64_t inv = f.inv(prow[col]);
    for (std::size_t c = col + 1; c < cols; ++c) prow[c] = f.mul(prow[c], inv);
    prow[col] = f.one();

    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      std::uint64_t* row = &a[r * cols];
      const std::uint64_t factor = row[col];
      if (factor == 0) continue;
      row[col] = 0;
      for (std::size_t c = col + 1; c < cols; ++c) row[c] = f.sub(row[c], f.mul(factor, prow[c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace fatpoints
