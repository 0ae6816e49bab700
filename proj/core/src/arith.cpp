#include "fatpoints/arith.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fatpoints/error.hpp"

namespace fatpoints {

namespace {

[[noreturn]] void overflow(const char* op, Int a, Int b) {
  throw Error(Errc::arithmetic_overflow,
              std::string(op) + "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add", a, b);
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub", a, b);
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul", a, b);
  return r;
}

Int binom(Int n, Int k) {
  if (k < 0) throw Error(Errc::precondition_failed, "binom with negative k");
  if (n < 0 || n < k) return 0;
  k = std::min(k, n - k);
  // C(n, i) = C(n, i-1) * (n - i + 1) / i is exact at every step; the
  // product is formed in 128 bits so only the final value can overflow.
  Int128 acc = 1;
  for (Int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<Int>::max()) overflow("binom", n, k);
  }
  return static_cast<Int>(acc);
}

}  // namespace fatpoints
