#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fatpoints/arith.hpp"

namespace fatpoints {

/// Deterministic Miller-Rabin for all 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// A uniformly drawn prime with exactly `bits` bits (2 <= bits <= 62).
std::uint64_t random_prime(int bits, std::mt19937_64& rng);

/// Arithmetic modulo an odd prime p < 2^62 in Montgomery representation.
/// Values handed to mul/add/sub are Montgomery residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t to_mont(std::uint64_t a) const noexcept { return redc(static_cast<UInt128>(a % p_) * r2_); }
  std::uint64_t from_mont(std::uint64_t a) const noexcept { return redc(a); }
  std::uint64_t one() const noexcept { return one_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return redc(static_cast<UInt128>(a) * b);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  /// Inverse of a non-zero Montgomery residue.
  std::uint64_t inv(std::uint64_t a) const noexcept { return pow(a, p_ - 2); }

 private:
  std::uint64_t redc(UInt128 t) const noexcept {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    const std::uint64_t u =
        static_cast<std::uint64_t>((t + static_cast<UInt128>(m) * p_) >> 64);
    return u >= p_ ? u - p_ : u;
  }

  std::uint64_t p_;
  std::uint64_t neg_inv_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;       // 2^128 mod p
  std::uint64_t one_;      // 2^64 mod p
};

/// Dense row-major matrix of residues modulo `prime`.
struct ConditionMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> entries;

  std::uint64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Rank over GF(prime) by Gaussian elimination with row pivoting.
/// Entries must already be reduced modulo the prime.
std::size_t rank_mod_p(const ConditionMatrix& m);

}  // namespace fatpoints
