#pragma once

#include "symharm/matrix.hpp"
#include "symharm/rational.hpp"

#include <cstdint>
#include <vector>

namespace symharm {

using i64 = std::int64_t;

// Thrown internally when the 128-bit fraction-free path would overflow;
// callers retry with arbitrary-precision integers (never with modular or
// floating-point arithmetic), so all results stay exact.
struct OverflowDetected {};

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<i64> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}

  i64& at(int i, int j) { return a[size_t(i) * size_t(cols) + size_t(j)]; }
  i64 at(int i, int j) const { return a[size_t(i) * size_t(cols) + size_t(j)]; }
};

// Exact rank via Bareiss elimination (128-bit first, big-integer fallback).
int int_rank(const IntMat& m);

// Rows form an integer basis of the right kernel, each gcd-reduced with the
// first nonzero entry positive. Throws OverflowDetected only if a basis
// entry cannot be represented in 64 bits even after reduction.
IntMat int_kernel_rows(const IntMat& m);

// Checked product; throws OverflowDetected if an entry leaves 64 bits.
IntMat int_mul(const IntMat& a, const IntMat& b);

// Clears denominators: returns D * m as an integer matrix where D is the
// least common multiple of all denominators. Throws OverflowDetected if an
// entry does not fit in 64 bits.
IntMat clear_denominators(const RatMatrix& m, BigInt* scale_out = nullptr);

RatMatrix to_rational(const IntMat& m);

}  // namespace symharm
