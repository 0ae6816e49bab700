#pragma once

#include <cstdint>

namespace fatpoints {

using Int = std::int64_t;

// 128-bit helpers for exact intermediate products.
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

// Overflow-checked integer arithmetic; all throw Errc::arithmetic_overflow.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Binomial coefficient C(n, k) for any integer n and k >= 0.
///
/// Uses the combinatorial convention C(n, k) = 0 whenever n < k or n < 0,
/// so that formulas summing C(m + 2, 3) over multiplicities can be applied
/// verbatim to vanishing or negative multiplicities. The result is exact;
/// a value that does not fit in Int raises Errc::arithmetic_overflow.
Int binom(Int n, Int k);

}  // namespace fatpoints
